#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

#include "tqg/rng.hpp"

namespace tqg {

/// Rounds per block in the deterministic block-parallel scheme. Each block
/// owns the stream Rng(master_seed, block_index); partial results are
/// reduced in ascending block order, so totals are bit-identical for any
/// worker count.
inline constexpr std::int64_t k_block_rounds = 1 << 16;

/// Worker count: TQG_WORKERS if set, else hardware concurrency.
int worker_count();

/// Runs `fn(block_index, rounds_in_block, rng)` for every block covering
/// `total_rounds` rounds and returns the partials indexed by block.
template <typename Partial, typename Fn>
std::vector<Partial> run_blocks(std::int64_t total_rounds, std::uint64_t master_seed,
                                int workers, Fn&& fn) {
  const std::int64_t n_blocks = (total_rounds + k_block_rounds - 1) / k_block_rounds;
  std::vector<Partial> parts(static_cast<std::size_t>(n_blocks));
  const auto rounds_in = [&](std::int64_t b) {
    return std::min(k_block_rounds, total_rounds - b * k_block_rounds);
  };

  int w = workers > 0 ? workers : worker_count();
  w = static_cast<int>(std::min<std::int64_t>(w, n_blocks));
  if (w <= 1) {
    for (std::int64_t b = 0; b < n_blocks; ++b) {
      Rng rng(master_seed, static_cast<std::uint64_t>(b));
      parts[static_cast<std::size_t>(b)] = fn(b, rounds_in(b), rng);
    }
    return parts;
  }

  std::atomic<std::int64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(w));
  for (int t = 0; t < w; ++t) {
    pool.emplace_back([&] {
      for (std::int64_t b = next.fetch_add(1); b < n_blocks; b = next.fetch_add(1)) {
        Rng rng(master_seed, static_cast<std::uint64_t>(b));
        parts[static_cast<std::size_t>(b)] = fn(b, rounds_in(b), rng);
      }
    });
  }
  for (auto& th : pool) th.join();
  return parts;
}

}  // namespace tqg
