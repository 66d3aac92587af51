#pragma once

#include <vector>

#include "cathybrid/fock.hpp"

namespace cathybrid {

// Real transmittance t in (0, 1); reflectance r = +sqrt(1 - t^2).
class BeamSplitterParams {
 public:
  explicit BeamSplitterParams(double t);
  double t() const { return t_; }
  double r() const { return r_; }

 private:
  double t_;
  double r_;
};

// Photon-number-conserving two-mode unitary acting as
//   a1^dag -> t a1^dag - r a2^dag,   a2^dag -> r a1^dag + t a2^dag.
// Stored as one real block per total photon number N = 0..max_total, with
// block(N)[p][q] = <p, N-p| U |q, N-q>.
class BeamSplitter {
 public:
  BeamSplitter(const BeamSplitterParams& params, int max_total);

  const BeamSplitterParams& params() const { return params_; }
  int max_total() const { return max_total_; }

  double element(int total, int p, int q) const;
  // max_N max_{i,j} |(U_N^T U_N - I)_{ij}|.
  double unitarity_defect() const;

  // U (v (x) |k>); output cutoffs are both v.cutoff() + k so nothing is lost.
  TwoModeState apply_to_product(const FockVector& mode1, int k) const;
  TwoModeState apply(const TwoModeState& in) const;

 private:
  std::size_t offset(int total) const;
  BeamSplitterParams params_;
  int max_total_;
  std::vector<double> blocks_;
};

BeamSplitter beam_splitter_unitary(const BeamSplitterParams& params, int cutoff = kDefaultCutoff);

}  // namespace cathybrid
