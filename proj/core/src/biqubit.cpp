#include "tqg/biqubit.hpp"

#include <algorithm>
#include <complex>
#include <stdexcept>

namespace tqg {

namespace {

using Eigen::Matrix2cd;
using Eigen::Matrix4cd;
using std::complex;

const complex<double> kI(0.0, 1.0);

Matrix2cd identity2() { return Matrix2cd::Identity(); }

// sigma.d for a unit axis d.
Matrix2cd spin_operator(const Direction& d) {
  Matrix2cd m;
  m << complex<double>(d.z(), 0.0), complex<double>(d.x(), -d.y()),
      complex<double>(d.x(), d.y()), complex<double>(-d.z(), 0.0);
  return m;
}

// chi_d^x = (1 + x sigma.d)/2
Matrix2cd projector(const Direction& d, Outcome o) {
  return 0.5 * (identity2() + static_cast<double>(value(o)) * spin_operator(d));
}

Matrix4cd kron(const Matrix2cd& a, const Matrix2cd& b) {
  Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

Matrix4cd embed(Side side, const Matrix2cd& m) {
  return side == Side::alice ? kron(m, identity2()) : kron(identity2(), m);
}

double real_trace_product(const Matrix4cd& a, const Matrix4cd& b) {
  return (a * b).trace().real();
}

}  // namespace

BiqubitDensity BiqubitDensity::from_matrix(const Matrix4cd& m) {
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("two-qubit state is not Hermitian");
  if (std::abs(m.trace() - complex<double>(1.0, 0.0)) > 1e-12)
    throw std::invalid_argument("two-qubit state does not have unit trace");
  Eigen::SelfAdjointEigenSolver<Matrix4cd> eig(m, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -1e-10)
    throw std::invalid_argument("two-qubit state is not positive semidefinite");
  return BiqubitDensity(unchecked_tag{}, m);
}

QubitDensity BiqubitDensity::marginal(Side side) const {
  Vec3 b;
  b.x = real_trace_product(m_, embed(side, spin_operator(Direction::x_axis())));
  b.y = real_trace_product(m_, embed(side, spin_operator(Direction::y_axis())));
  b.z = real_trace_product(m_, embed(side, spin_operator(Direction::z_axis())));
  const double n = b.norm();
  if (n > 1.0) b = (1.0 / n) * b;  // round-off guard
  return QubitDensity(b);
}

BiqubitDensity make_singlet() {
  Eigen::Vector4cd psi;
  psi << 0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0;
  return BiqubitDensity(BiqubitDensity::unchecked_tag{}, psi * psi.adjoint());
}

BiqubitDensity make_pure_product(const Direction& a, const Direction& b) {
  const Matrix2cd rho_a = projector(a, Outcome::plus);
  const Matrix2cd rho_b = projector(b, Outcome::plus);
  return BiqubitDensity(BiqubitDensity::unchecked_tag{}, kron(rho_a, rho_b));
}

double local_probability(const BiqubitDensity& state, Side side, const Direction& dir,
                         Outcome outcome) {
  const double p = real_trace_product(state.matrix(), embed(side, projector(dir, outcome)));
  return std::clamp(p, 0.0, 1.0);
}

BiqubitDensity local_collapse(const BiqubitDensity& state, Side side, const Direction& dir,
                              Outcome outcome) {
  const double p = local_probability(state, side, dir, outcome);
  if (p <= 0.0) throw std::domain_error("impossible outcome");
  const Matrix4cd x = embed(side, projector(dir, outcome));
  Matrix4cd post = (x * state.matrix() * x) / p;
  post = 0.5 * (post + post.adjoint().eval());  // keep Hermitian under round-off
  return BiqubitDensity(BiqubitDensity::unchecked_tag{}, post);
}

std::pair<Outcome, BiqubitDensity> sample_local_measurement(const BiqubitDensity& state,
                                                            Side side, const Direction& dir,
                                                            Rng& rng) {
  const double p_plus = local_probability(state, side, dir, Outcome::plus);
  const Outcome o = rng.uniform() < p_plus ? Outcome::plus : Outcome::minus;
  return {o, local_collapse(state, side, dir, o)};
}

double correlator(const BiqubitDensity& state, const Direction& a, const Direction& b) {
  const double c = real_trace_product(state.matrix(), kron(spin_operator(a), spin_operator(b)));
  return std::clamp(c, -1.0, 1.0);
}

}  // namespace tqg
