#include "cathybrid/entanglement.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

#include "cathybrid/errors.hpp"
#include "cathybrid/hybrid.hpp"

namespace cathybrid {

BipartiteState::BipartiteState(const FockVector& qubit0_branch, const FockVector& qubit1_branch) {
  if (qubit0_branch.size() != qubit1_branch.size()) throw DimensionError("qubit branches differ in cutoff");
  cv_dim_ = qubit0_branch.size();
  amps_.resize(cv_dim_ * 2);
  for (std::size_t n = 0; n < cv_dim_; ++n) {
    amps_[2 * n] = qubit0_branch[n];
    amps_[2 * n + 1] = qubit1_branch[n];
  }
}

BipartiteState BipartiteState::from_result(const ConditionalResult& result, const DelocalizedPhoton& photon) {
  if (!result.defined || result.probability <= 0.0) throw NormalizationError("outcome has zero probability");
  const double scale = 1.0 / std::sqrt(result.probability);
  const FockVector one = (photon.a0() * std::sqrt(result.psi_weight) * scale) * result.psi;
  const FockVector zero = (photon.a1() * std::sqrt(result.phi_weight) * scale) * result.phi;
  return BipartiteState(zero, one);
}

double BipartiteState::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

BipartiteState BipartiteState::rotate_qubit(Complex u00, Complex u01, Complex u10, Complex u11) const {
  BipartiteState out;
  out.cv_dim_ = cv_dim_;
  out.amps_.resize(amps_.size());
  for (std::size_t n = 0; n < cv_dim_; ++n) {
    const Complex q0 = amps_[2 * n];
    const Complex q1 = amps_[2 * n + 1];
    out.amps_[2 * n] = u00 * q0 + u01 * q1;
    out.amps_[2 * n + 1] = u10 * q0 + u11 * q1;
  }
  return out;
}

double negativity_closed(Complex a0, Complex a1, double b_abs) {
  if (!(b_abs >= 0.0)) return 0.0;
  if (std::isinf(b_abs)) return 0.0;
  const double m0 = std::abs(a0);
  const double m1 = std::abs(a1);
  const double den = m0 * m0 + m1 * m1 * b_abs * b_abs;
  if (den == 0.0) return 0.0;
  return 2.0 * m0 * m1 * b_abs / den;
}

double negativity_ppt(const BipartiteState& state) {
  if (std::abs(state.norm_squared() - 1.0) > 1e-9) throw NormalizationError("negativity needs a normalized state");
  const int d = state.cv_dim();
  const int dim = 2 * d;
  // (rho^{T_B})_{(i,a),(j,b)} = rho_{(i,b),(j,a)} = psi_{i,b} conj(psi_{j,a}).
  Eigen::MatrixXcd pt(dim, dim);
  for (int i = 0; i < d; ++i) {
    for (int a = 0; a < 2; ++a) {
      for (int j = 0; j < d; ++j) {
        for (int b = 0; b < 2; ++b) pt(2 * i + a, 2 * j + b) = state(i, b) * std::conj(state(j, a));
      }
    }
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(pt, Eigen::EigenvaluesOnly);
  double negative = 0.0;
  for (int k = 0; k < dim; ++k) {
    const double ev = solver.eigenvalues()(k);
    if (ev < 0.0) negative -= ev;
  }
  return 2.0 * negative;
}

bool max_negativity_condition(Complex a0, Complex a1, double b_abs) {
  return std::abs(std::abs(a0) - std::abs(a1) * b_abs) <= 1e-9;
}

}  // namespace cathybrid
