#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tqg/biqubit.hpp"
#include "tqg/qubit.hpp"
#include "tqg/vec3.hpp"

namespace tqg {

/// Which qubit the intervener measures. Temporal games use the single
/// shared qubit; the nonlocal-temporal game targets one side of the pair.
enum class InterventionTarget { shared_qubit, alice_qubit, bob_qubit };

/// Ordered projective measurements inserted between the two players'
/// measurements. May be empty (n = 0). The same schedule applies to every
/// round; intervener outcomes are sampled and discarded.
struct InterventionSchedule {
  std::vector<Direction> dirs;
  InterventionTarget target = InterventionTarget::shared_qubit;

  static InterventionSchedule none() { return {}; }
  static InterventionSchedule shared(std::vector<Direction> d) {
    return {std::move(d), InterventionTarget::shared_qubit};
  }
  static InterventionSchedule on_alice(std::vector<Direction> d) {
    return {std::move(d), InterventionTarget::alice_qubit};
  }
  static InterventionSchedule on_bob(std::vector<Direction> d) {
    return {std::move(d), InterventionTarget::bob_qubit};
  }

  std::size_t size() const { return dirs.size(); }
  bool empty() const { return dirs.empty(); }
};

struct CorrelatorEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t n_samples = 0;
};

/// Chain attenuation factor: the product of cosines between consecutive
/// intervention axes, (r1.r2)(r2.r3)...(r_{n-1}.r_n). Empty and
/// single-element chains give 1.
double beta(std::span<const Direction> dirs);

/// beta_n times the final cosine to the second player's axis, (r_n.b).
/// Requires a nonempty chain.
double kappa(std::span<const Direction> dirs, const Direction& b);

/// Closed-form two-time correlator of outcomes at a and b with the schedule
/// in between: a.b for n = 0, else beta_n (a.r1)(r_n.b). Independent of the
/// initial state. Requires a shared-qubit schedule.
double analytic_temporal_correlator(const Direction& a, const InterventionSchedule& sched,
                                    const Direction& b);

/// The unsimplified sum over all 2^(n+2) outcome chains, each weighted by
/// its product of Born probabilities. This is the independent oracle for
/// analytic_temporal_correlator and is capped at n = 20 interventions
/// (throws "enumeration overflow" beyond).
double chain_enumeration_correlator(const QubitDensity& rho, const Direction& a,
                                    const InterventionSchedule& sched, const Direction& b);

inline constexpr std::size_t k_max_enumeration_interventions = 20;

/// Sampling estimator of the temporal correlator: per round, measure along
/// a, run the schedule (outcomes discarded), measure along b, average the
/// outcome product. std_error = sqrt((1 - mean^2)/n).
CorrelatorEstimate mc_temporal_correlator(const QubitDensity& rho, const Direction& a,
                                          const InterventionSchedule& sched, const Direction& b,
                                          std::int64_t n_rounds, std::uint64_t seed,
                                          int workers = 0);

/// Correlator of Alice's measurement along a (earlier) and Bob's along b
/// (later) on a shared pair, with the schedule on one side in between.
/// Alice-side or empty schedules leave the correlator unchanged; a Bob-side
/// schedule gives kappa_n * <sigma.a (x) sigma.r1>.
double analytic_spatiotemporal_correlator(const BiqubitDensity& rho, const Direction& a,
                                          const Direction& b,
                                          const InterventionSchedule& sched);

/// Sequential-collapse sampling estimator of the spatio-temporal correlator.
CorrelatorEstimate mc_spatiotemporal_correlator(const BiqubitDensity& rho, const Direction& a,
                                                const Direction& b,
                                                const InterventionSchedule& sched,
                                                std::int64_t n_rounds, std::uint64_t seed,
                                                int workers = 0);

}  // namespace tqg
