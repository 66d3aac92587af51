#pragma once

#include <vector>

#include "cathybrid/fock.hpp"

namespace cathybrid {

struct ConditionalResult;
class DelocalizedPhoton;

// Pure state of (CV mode) x (qubit), amplitudes indexed (n, q) with q in {0, 1}.
class BipartiteState {
 public:
  BipartiteState(const FockVector& qubit0_branch, const FockVector& qubit1_branch);

  // The heralded state a0 |psi>|1> + a1 B |phi>|0> of one outcome.
  static BipartiteState from_result(const ConditionalResult& result, const DelocalizedPhoton& photon);

  int cv_dim() const { return static_cast<int>(cv_dim_); }
  Complex operator()(int n, int q) const { return amps_[static_cast<std::size_t>(n) * 2 + static_cast<std::size_t>(q)]; }
  double norm_squared() const;

  // Applies a 2x2 unitary {{u00, u01}, {u10, u11}} to the qubit factor.
  BipartiteState rotate_qubit(Complex u00, Complex u01, Complex u10, Complex u11) const;

 private:
  BipartiteState() = default;
  std::size_t cv_dim_ = 0;
  std::vector<Complex> amps_;
};

// 2|a0||a1| b / (|a0|^2 + |a1|^2 b^2).
double negativity_closed(Complex a0, Complex a1, double b_abs);

// ||rho^{T_qubit}||_1 - 1 from a full eigen-decomposition.
double negativity_ppt(const BipartiteState& state);

// True when |a0| = |a1| |B| to within 1e-9.
bool max_negativity_condition(Complex a0, Complex a1, double b_abs);

}  // namespace cathybrid
