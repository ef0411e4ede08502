#include "tqg/correlators.hpp"

#include <cmath>
#include <stdexcept>

#include "tqg/parallel.hpp"

namespace tqg {

namespace {

void require_shared(const InterventionSchedule& sched) {
  if (!sched.empty() && sched.target != InterventionTarget::shared_qubit)
    throw std::invalid_argument("temporal correlator requires a shared-qubit schedule");
}

void require_one_sided(const InterventionSchedule& sched) {
  if (!sched.empty() && sched.target == InterventionTarget::shared_qubit)
    throw std::invalid_argument(
        "spatio-temporal correlator requires an alice- or bob-qubit schedule");
}

CorrelatorEstimate reduce_product_sums(std::span<const std::int64_t> block_sums,
                                       std::int64_t n_rounds) {
  std::int64_t total = 0;
  for (const std::int64_t s : block_sums) total += s;  // ascending block order
  const double mean = static_cast<double>(total) / static_cast<double>(n_rounds);
  const double var = std::max(0.0, 1.0 - mean * mean);
  return {mean, std::sqrt(var / static_cast<double>(n_rounds)), n_rounds};
}

}  // namespace

double beta(std::span<const Direction> dirs) {
  double prod = 1.0;
  for (std::size_t i = 0; i + 1 < dirs.size(); ++i) prod *= dot(dirs[i], dirs[i + 1]);
  return prod;
}

double kappa(std::span<const Direction> dirs, const Direction& b) {
  if (dirs.empty()) throw std::invalid_argument("kappa requires a nonempty schedule");
  return beta(dirs) * dot(dirs.back(), b);
}

double analytic_temporal_correlator(const Direction& a, const InterventionSchedule& sched,
                                    const Direction& b) {
  require_shared(sched);
  if (sched.empty()) return dot(a, b);
  return beta(sched.dirs) * dot(a, sched.dirs.front()) * dot(sched.dirs.back(), b);
}

double chain_enumeration_correlator(const QubitDensity& rho, const Direction& a,
                                    const InterventionSchedule& sched, const Direction& b) {
  require_shared(sched);
  const std::size_t n = sched.size();
  if (n > k_max_enumeration_interventions) throw std::invalid_argument("enumeration overflow");

  // Measurement axes in chronological order: a, r_1..r_n, b.
  std::vector<Vec3> axes;
  axes.reserve(n + 2);
  axes.push_back(a.vec());
  for (const Direction& r : sched.dirs) axes.push_back(r.vec());
  axes.push_back(b.vec());

  const double first_dot = dot(rho.bloch(), axes.front());
  std::vector<double> link;  // axes[i-1].axes[i]
  link.reserve(n + 1);
  for (std::size_t i = 1; i < axes.size(); ++i) link.push_back(dot(axes[i - 1], axes[i]));

  const std::size_t chain_len = n + 2;
  const std::uint64_t n_chains = std::uint64_t{1} << chain_len;
  double sum = 0.0;
  for (std::uint64_t mask = 0; mask < n_chains; ++mask) {
    const auto outcome_at = [mask](std::size_t i) {
      return (mask >> i) & 1u ? -1.0 : +1.0;
    };
    double w = 0.5 * (1.0 + outcome_at(0) * first_dot);
    for (std::size_t i = 1; i < chain_len && w != 0.0; ++i)
      w *= 0.5 * (1.0 + outcome_at(i - 1) * outcome_at(i) * link[i - 1]);
    sum += outcome_at(0) * outcome_at(chain_len - 1) * w;
  }
  return sum;
}

CorrelatorEstimate mc_temporal_correlator(const QubitDensity& rho, const Direction& a,
                                          const InterventionSchedule& sched, const Direction& b,
                                          std::int64_t n_rounds, std::uint64_t seed,
                                          int workers) {
  require_shared(sched);
  if (n_rounds < 1) throw std::invalid_argument("n_rounds must be positive");

  const auto block = [&](std::int64_t, std::int64_t rounds, Rng& rng) -> std::int64_t {
    std::int64_t sum = 0;
    for (std::int64_t i = 0; i < rounds; ++i) {
      auto [oa, state] = sample_measurement(rho, a, rng);
      for (const Direction& r : sched.dirs) state = sample_measurement(state, r, rng).second;
      const auto [ob, final_state] = sample_measurement(state, b, rng);
      sum += value(oa) * value(ob);
    }
    return sum;
  };
  const auto sums = run_blocks<std::int64_t>(n_rounds, seed, workers, block);
  return reduce_product_sums(sums, n_rounds);
}

double analytic_spatiotemporal_correlator(const BiqubitDensity& rho, const Direction& a,
                                          const Direction& b,
                                          const InterventionSchedule& sched) {
  require_one_sided(sched);
  if (sched.empty() || sched.target == InterventionTarget::alice_qubit)
    return correlator(rho, a, b);
  return kappa(sched.dirs, b) * correlator(rho, a, sched.dirs.front());
}

CorrelatorEstimate mc_spatiotemporal_correlator(const BiqubitDensity& rho, const Direction& a,
                                                const Direction& b,
                                                const InterventionSchedule& sched,
                                                std::int64_t n_rounds, std::uint64_t seed,
                                                int workers) {
  require_one_sided(sched);
  if (n_rounds < 1) throw std::invalid_argument("n_rounds must be positive");
  const Side intervened =
      sched.target == InterventionTarget::alice_qubit ? Side::alice : Side::bob;

  const auto block = [&](std::int64_t, std::int64_t rounds, Rng& rng) -> std::int64_t {
    std::int64_t sum = 0;
    for (std::int64_t i = 0; i < rounds; ++i) {
      auto [oa, state] = sample_local_measurement(rho, Side::alice, a, rng);
      for (const Direction& r : sched.dirs)
        state = sample_local_measurement(state, intervened, r, rng).second;
      const auto [ob, final_state] = sample_local_measurement(state, Side::bob, b, rng);
      sum += value(oa) * value(ob);
    }
    return sum;
  };
  const auto sums = run_blocks<std::int64_t>(n_rounds, seed, workers, block);
  return reduce_product_sums(sums, n_rounds);
}

}  // namespace tqg
