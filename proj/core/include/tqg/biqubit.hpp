#pragma once

#include <Eigen/Dense>
#include <utility>

#include "tqg/qubit.hpp"
#include "tqg/rng.hpp"
#include "tqg/vec3.hpp"

namespace tqg {

enum class Side { alice, bob };

/// Two-qubit density matrix, 4x4 complex, basis |00>,|01>,|10>,|11> with
/// Alice's qubit as the first tensor factor.
class BiqubitDensity {
 public:
  /// Validates Hermiticity (1e-12), unit trace (1e-12) and positive
  /// semidefiniteness (eigenvalue floor -1e-10 to absorb round-off).
  static BiqubitDensity from_matrix(const Eigen::Matrix4cd& m);

  const Eigen::Matrix4cd& matrix() const { return m_; }

  /// Reduced single-qubit state of one side (partial trace over the other).
  QubitDensity marginal(Side side) const;

 private:
  friend BiqubitDensity make_singlet();
  friend BiqubitDensity make_pure_product(const Direction&, const Direction&);
  friend BiqubitDensity local_collapse(const BiqubitDensity&, Side, const Direction&, Outcome);

  struct unchecked_tag {};
  BiqubitDensity(unchecked_tag, Eigen::Matrix4cd m) : m_(std::move(m)) {}

  Eigen::Matrix4cd m_;
};

/// Maximally entangled singlet |psi-><psi-|; its correlator is -a.b for
/// every pair of axes.
BiqubitDensity make_singlet();

/// Pure product state |a><a| (x) |b><b| of the +1 eigenstates along a and b.
BiqubitDensity make_pure_product(const Direction& a, const Direction& b);

/// Probability of `outcome` for a projective measurement along `dir` on one
/// side: Tr(rho * (chi (x) 1)) resp. Tr(rho * (1 (x) chi)).
double local_probability(const BiqubitDensity& state, Side side, const Direction& dir,
                         Outcome outcome);

/// Post-measurement two-qubit state (X rho X) / Tr(rho X) for the embedded
/// projector X. Throws std::domain_error("impossible outcome") at zero
/// probability.
BiqubitDensity local_collapse(const BiqubitDensity& state, Side side, const Direction& dir,
                              Outcome outcome);

std::pair<Outcome, BiqubitDensity> sample_local_measurement(const BiqubitDensity& state,
                                                            Side side, const Direction& dir,
                                                            Rng& rng);

/// Two-point correlator <sigma.a (x) sigma.b> of the state.
double correlator(const BiqubitDensity& state, const Direction& a, const Direction& b);

}  // namespace tqg
