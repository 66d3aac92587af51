#include "cathybrid/displacement.hpp"

#include <cmath>
#include <string>

#include "cathybrid/errors.hpp"

namespace cathybrid {

namespace {

void check_range(int n, int m, double alpha) {
  if (n < 0 || m < 0) throw RangeError("Fock indices must be nonnegative");
  if (n > kMaxFockIndex || m > kMaxFockIndex) {
    throw RangeError("Fock index above " + std::to_string(kMaxFockIndex) + " loses precision");
  }
  if (!std::isfinite(alpha) || std::abs(alpha) > kMaxDisplacement) {
    throw RangeError("displacement " + num(alpha) + " outside [-8, 8]");
  }
}

}  // namespace

double displacement_prefactor(double alpha) { return std::exp(-0.5 * alpha * alpha); }

double assoc_laguerre(int k, int a, double x) {
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + a - x;
  for (int i = 1; i < k; ++i) {
    const double next = ((2.0 * i + 1.0 + a - x) * cur - (i + a) * prev) / (i + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double displacement_coeff(int n, int m, double alpha) {
  check_range(n, m, alpha);
  if (n == m) return assoc_laguerre(n, 0, alpha * alpha);
  if (alpha == 0.0) return 0.0;
  // For m > n: sqrt(n!/m!) alpha^(m-n) L_n^(m-n)(alpha^2); the m < n branch
  // follows from swapping roles and alpha -> -alpha.
  const int lo = std::min(n, m);
  const int hi = std::max(n, m);
  const double a = (m > n) ? alpha : -alpha;
  const double log_mag = 0.5 * (std::lgamma(lo + 1.0) - std::lgamma(hi + 1.0)) + (hi - lo) * std::log(std::abs(a));
  double value = std::exp(log_mag) * assoc_laguerre(lo, hi - lo, alpha * alpha);
  if (a < 0.0 && (hi - lo) % 2 == 1) value = -value;
  if (!std::isfinite(value)) throw RangeError("displacement coefficient overflow");
  return value;
}

FockVector displaced_number_state(int l, double alpha, int cutoff, double tail_tol) {
  if (l < 0) throw RangeError("photon number must be nonnegative");
  if (cutoff < kTailLevels || cutoff > kMaxFockIndex) {
    throw RangeError("cutoff must lie in [" + std::to_string(kTailLevels) + ", " + std::to_string(kMaxFockIndex) + "]");
  }
  const double f = displacement_prefactor(alpha);
  FockVector v(cutoff);
  for (int m = 0; m <= cutoff; ++m) v[static_cast<std::size_t>(m)] = f * displacement_coeff(l, m, alpha);
  check_tail(v, tail_tol, "displaced number state");
  return v;
}

FockVector displaced_number_state(int l, Complex alpha, int cutoff, double tail_tol) {
  if (alpha.imag() != 0.0) throw InputError("only real displacement amplitudes are supported");
  return displaced_number_state(l, alpha.real(), cutoff, tail_tol);
}

DisplacementTable::DisplacementTable(double alpha, int cutoff)
    : alpha_(alpha), cutoff_(cutoff), prefactor_(displacement_prefactor(alpha)) {
  if (cutoff < 0 || cutoff > kMaxFockIndex) throw RangeError("cutoff outside [0, 128]");
  check_range(0, 0, alpha);
  coeffs_.resize(static_cast<std::size_t>(cutoff + 1) * static_cast<std::size_t>(cutoff + 1));
  for (int n = 0; n <= cutoff; ++n) {
    for (int m = 0; m <= cutoff; ++m) coeffs_[idx(n, m)] = displacement_coeff(n, m, alpha);
  }
}

double DisplacementTable::row_orthonormality_defect(int rows) const {
  const double w = std::exp(-alpha_ * alpha_);
  double worst = 0.0;
  for (int l = 0; l <= rows; ++l) {
    for (int n = 0; n <= rows; ++n) {
      double s = 0.0;
      for (int m = 0; m <= cutoff_; ++m) s += coeffs_[idx(l, m)] * coeffs_[idx(n, m)];
      for (int m = cutoff_ + 1; m <= kMaxFockIndex; ++m) s += displacement_coeff(l, m, alpha_) * displacement_coeff(n, m, alpha_);
      worst = std::max(worst, std::abs(w * s - (l == n ? 1.0 : 0.0)));
    }
  }
  return worst;
}

double DisplacementTable::sign_symmetry_defect(const DisplacementTable& mirror) const {
  if (mirror.cutoff_ != cutoff_) throw DimensionError("tables differ in cutoff");
  double worst = 0.0;
  for (int n = 0; n <= cutoff_; ++n) {
    for (int m = 0; m <= cutoff_; ++m) {
      const double sign = ((m - n) % 2 == 0) ? 1.0 : -1.0;
      worst = std::max(worst, std::abs(mirror.coeff(n, m) - sign * coeff(n, m)));
    }
  }
  return worst;
}

DisplacementTable build_table(double alpha, int cutoff) { return DisplacementTable(alpha, cutoff); }

}  // namespace cathybrid
