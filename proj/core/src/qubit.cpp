#include "tqg/qubit.hpp"

#include <algorithm>

namespace tqg {

double project_probability(const QubitDensity& state, const Direction& dir, Outcome outcome) {
  const double p = 0.5 * (1.0 + value(outcome) * dot(state.bloch(), dir));
  return std::clamp(p, 0.0, 1.0);
}

QubitDensity collapse(const QubitDensity& state, const Direction& dir, Outcome outcome) {
  if (project_probability(state, dir, outcome) <= 0.0)
    throw std::domain_error("impossible outcome");
  return QubitDensity(static_cast<double>(value(outcome)) * dir.vec());
}

std::pair<Outcome, QubitDensity> sample_measurement(const QubitDensity& state,
                                                    const Direction& dir, Rng& rng) {
  const double p_plus = project_probability(state, dir, Outcome::plus);
  const Outcome o = rng.uniform() < p_plus ? Outcome::plus : Outcome::minus;
  return {o, QubitDensity(static_cast<double>(value(o)) * dir.vec())};
}

}  // namespace tqg
