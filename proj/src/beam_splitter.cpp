#include "cathybrid/beam_splitter.hpp"

#include <cmath>
#include <string>

#include "cathybrid/displacement.hpp"
#include "cathybrid/errors.hpp"

namespace cathybrid {

BeamSplitterParams::BeamSplitterParams(double t) : t_(t), r_(0.0) {
  if (!(t > 0.0 && t < 1.0)) throw ConfigError("transmittance must lie in the open interval (0, 1)");
  r_ = std::sqrt((1.0 - t) * (1.0 + t));
}

std::size_t BeamSplitter::offset(int total) const {
  // sum_{N' < N} (N'+1)^2
  const auto n = static_cast<std::size_t>(total);
  return n * (n + 1) * (2 * n + 1) / 6;
}

BeamSplitter::BeamSplitter(const BeamSplitterParams& params, int max_total) : params_(params), max_total_(max_total) {
  if (max_total < 0 || max_total > 2 * kMaxFockIndex + 2) throw RangeError("beam splitter photon budget out of range");
  blocks_.assign(offset(max_total + 1), 0.0);
  const double t = params.t();
  const double r = params.r();

  // Block M from block M-1, using
  //   |q, M-q> = (sqrt(q) a1^dag |q-1, M-q> + sqrt(M-q) a2^dag |q, M-q-1>) / M
  // with U a1^dag U^dag = t a1^dag - r a2^dag and U a2^dag U^dag = r a1^dag + t a2^dag.
  // Averaging both routes keeps the recursion stable at large M.
  blocks_[0] = 1.0;
  for (int m = 1; m <= max_total; ++m) {
    const double* prev = &blocks_[offset(m - 1)];
    double* block = &blocks_[offset(m)];
    const auto pdim = static_cast<std::size_t>(m);
    const auto dim = static_cast<std::size_t>(m + 1);
    auto prev_at = [&](int p, int q) {
      return (p < 0 || p >= m) ? 0.0 : prev[static_cast<std::size_t>(p) * pdim + static_cast<std::size_t>(q)];
    };
    for (int q = 0; q <= m; ++q) {
      for (int p = 0; p <= m; ++p) {
        const double up = std::sqrt(static_cast<double>(p));
        const double down = std::sqrt(static_cast<double>(m - p));
        double v = 0.0;
        if (q >= 1) v += std::sqrt(static_cast<double>(q)) * (t * up * prev_at(p - 1, q - 1) - r * down * prev_at(p, q - 1));
        if (q < m) v += std::sqrt(static_cast<double>(m - q)) * (r * up * prev_at(p - 1, q) + t * down * prev_at(p, q));
        block[static_cast<std::size_t>(p) * dim + static_cast<std::size_t>(q)] = v / m;
      }
    }
  }
}

double BeamSplitter::element(int total, int p, int q) const {
  if (total < 0 || total > max_total_ || p < 0 || p > total || q < 0 || q > total) return 0.0;
  const auto dim = static_cast<std::size_t>(total + 1);
  return blocks_[offset(total) + static_cast<std::size_t>(p) * dim + static_cast<std::size_t>(q)];
}

double BeamSplitter::unitarity_defect() const {
  double worst = 0.0;
  for (int total = 0; total <= max_total_; ++total) {
    for (int i = 0; i <= total; ++i) {
      for (int j = 0; j <= total; ++j) {
        double s = 0.0;
        for (int p = 0; p <= total; ++p) s += element(total, p, i) * element(total, p, j);
        worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
      }
    }
  }
  return worst;
}

TwoModeState BeamSplitter::apply_to_product(const FockVector& mode1, int k) const {
  const int out_cutoff = mode1.cutoff() + k;
  if (k < 0) throw DimensionError("mode-2 photon number must be nonnegative");
  if (out_cutoff > max_total_) {
    throw RangeError("beam splitter built for " + std::to_string(max_total_) + " photons, input needs " +
                     std::to_string(out_cutoff));
  }
  TwoModeState out(out_cutoff, out_cutoff);
  for (int q = 0; q <= mode1.cutoff(); ++q) {
    const Complex a = mode1[static_cast<std::size_t>(q)];
    if (a == Complex{}) continue;
    const int total = q + k;
    for (int p = 0; p <= total; ++p) out(p, total - p) += a * element(total, p, q);
  }
  return out;
}

TwoModeState BeamSplitter::apply(const TwoModeState& in) const {
  const int out_cutoff = in.cutoff1() + in.cutoff2();
  if (out_cutoff > max_total_) throw RangeError("beam splitter photon budget too small for input");
  TwoModeState out(out_cutoff, out_cutoff);
  for (int q1 = 0; q1 <= in.cutoff1(); ++q1) {
    for (int q2 = 0; q2 <= in.cutoff2(); ++q2) {
      const Complex a = in(q1, q2);
      if (a == Complex{}) continue;
      const int total = q1 + q2;
      for (int p = 0; p <= total; ++p) out(p, total - p) += a * element(total, p, q1);
    }
  }
  return out;
}

BeamSplitter beam_splitter_unitary(const BeamSplitterParams& params, int cutoff) {
  if (cutoff < 0 || cutoff > kMaxFockIndex) throw RangeError("cutoff outside [0, 128]");
  return BeamSplitter(params, cutoff + 1);
}

}  // namespace cathybrid
