#pragma once

#include <stdexcept>
#include <utility>

#include "tqg/rng.hpp"
#include "tqg/vec3.hpp"

namespace tqg {

/// Dichotomic measurement outcome, eigenvalue +1 or -1.
enum class Outcome : int { plus = +1, minus = -1 };

constexpr int value(Outcome o) { return static_cast<int>(o); }

constexpr Outcome outcome_from_value(int v) {
  if (v == +1) return Outcome::plus;
  if (v == -1) return Outcome::minus;
  throw std::invalid_argument("outcome must be +1 or -1");
}

constexpr Outcome opposite(Outcome o) {
  return o == Outcome::plus ? Outcome::minus : Outcome::plus;
}

/// Single-qubit density matrix rho = (1 + b.sigma)/2, stored as its Bloch
/// vector b with |b| <= 1. Projective measurement and collapse have closed
/// forms in this parameterization; the 2x2 matrix never needs to be built.
class QubitDensity {
 public:
  /// Maximally mixed state, b = 0.
  QubitDensity() = default;

  explicit QubitDensity(Vec3 bloch) : bloch_(bloch) {
    if (bloch.norm() > 1.0 + 1e-12)
      throw std::invalid_argument("Bloch vector longer than 1: not a density matrix");
  }

  static QubitDensity maximally_mixed() { return QubitDensity(); }
  static QubitDensity pure(const Direction& d) { return QubitDensity(d.vec()); }

  Vec3 bloch() const { return bloch_; }

  friend bool operator==(const QubitDensity& a, const QubitDensity& b) {
    return a.bloch_ == b.bloch_;
  }

 private:
  Vec3 bloch_;
};

/// Born-rule probability of obtaining `outcome` when measuring the spin
/// projection along `dir`: Tr(rho * (1 + x sigma.d)/2) = (1 + x b.d)/2.
double project_probability(const QubitDensity& state, const Direction& dir, Outcome outcome);

/// Post-measurement state: the eigenstate of sigma.d with eigenvalue
/// `outcome`, i.e. Bloch vector x*d. Throws std::domain_error("impossible
/// outcome") if the outcome has zero probability.
QubitDensity collapse(const QubitDensity& state, const Direction& dir, Outcome outcome);

/// Draws an outcome from the Born rule and returns it with the collapsed
/// state. The only mutation is the caller-supplied stream.
std::pair<Outcome, QubitDensity> sample_measurement(const QubitDensity& state,
                                                    const Direction& dir, Rng& rng);

}  // namespace tqg
