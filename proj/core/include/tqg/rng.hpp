#pragma once

#include <cstdint>
#include <random>

#include "tqg/vec3.hpp"

namespace tqg {

/// splitmix64 finalizer over (master seed, block index). Block b of a run
/// draws its stream seed from mix_seed(master, b); the additive constant is
/// the splitmix64 increment, so distinct blocks land on distinct splitmix64
/// states. The scheme is recorded in output metadata under k_seed_mix_id.
constexpr std::uint64_t mix_seed(std::uint64_t master, std::uint64_t block) {
  std::uint64_t z = master + (block + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline constexpr char k_seed_mix_id[] = "splitmix64(master_seed + (block+1)*0x9E3779B97F4A7C15)";

/// Deterministic uniform stream. mt19937_64 output is fully specified by the
/// standard, and the [0,1) conversion below avoids the implementation-defined
/// std::uniform_real_distribution, so sequences are identical across
/// platforms and compilers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t master, std::uint64_t block) : engine_(mix_seed(master, block)) {}

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  std::uint64_t bits() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Uniform direction on the unit sphere.
inline Direction random_direction(Rng& rng) {
  const double z = 2.0 * rng.uniform() - 1.0;
  const double phi = 2.0 * 3.14159265358979323846 * rng.uniform();
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  return Direction(Vec3{s * std::cos(phi), s * std::sin(phi), z});
}

/// Uniform Bloch vector in the closed unit ball (a valid mixed state).
inline Vec3 random_bloch_vector(Rng& rng) {
  const double r = std::cbrt(rng.uniform());
  return r * random_direction(rng).vec();
}

}  // namespace tqg
