#pragma once

#include <vector>

#include "cathybrid/fock.hpp"

namespace cathybrid {

// Supported displacement range; outside it double precision no longer
// carries ten significant digits through the Laguerre evaluation.
inline constexpr double kMaxDisplacement = 8.0;
inline constexpr int kMaxFockIndex = 128;

// F(alpha) = exp(-|alpha|^2 / 2).
double displacement_prefactor(double alpha);

// Associated Laguerre polynomial L_k^{(a)}(x) by the three-term recurrence.
double assoc_laguerre(int k, int a, double x);

// c_nm(alpha) = exp(alpha^2/2) <m|D(alpha)|n>, so that
// D(alpha)|n> = F(alpha) sum_m c_nm(alpha) |m>.
double displacement_coeff(int n, int m, double alpha);

// D(alpha)|l> truncated at `cutoff`. Throws TruncationError if the top levels
// carry more than `tail_tol`.
FockVector displaced_number_state(int l, double alpha, int cutoff = kDefaultCutoff,
                                  double tail_tol = kDefaultTailTolerance);
// Complex entry point; only real amplitudes are supported.
FockVector displaced_number_state(int l, Complex alpha, int cutoff = kDefaultCutoff,
                                  double tail_tol = kDefaultTailTolerance);

class DisplacementTable {
 public:
  DisplacementTable(double alpha, int cutoff);

  double alpha() const { return alpha_; }
  int cutoff() const { return cutoff_; }
  double prefactor() const { return prefactor_; }

  // c_nm(alpha).
  double coeff(int n, int m) const { return coeffs_[idx(n, m)]; }
  // <m|D(alpha)|n> = F(alpha) c_nm(alpha).
  double matrix_element(int m, int n) const { return prefactor_ * coeffs_[idx(n, m)]; }

  // max_{l,n <= rows} |exp(-alpha^2) sum_m c_lm c_nm - delta_ln|, with m running
  // past the table up to kMaxFockIndex so only the coefficients are tested.
  double row_orthonormality_defect(int rows) const;
  // max_{n,m} |c_nm(-alpha) - (-1)^{m-n} c_nm(alpha)| against `mirror` built at -alpha.
  double sign_symmetry_defect(const DisplacementTable& mirror) const;

 private:
  std::size_t idx(int n, int m) const {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(cutoff_ + 1) + static_cast<std::size_t>(m);
  }
  double alpha_;
  int cutoff_;
  double prefactor_;
  std::vector<double> coeffs_;
};

DisplacementTable build_table(double alpha, int cutoff = kDefaultCutoff);

}  // namespace cathybrid
