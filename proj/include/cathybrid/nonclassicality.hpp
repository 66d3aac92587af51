#pragma once

#include <vector>

#include "cathybrid/fock.hpp"

namespace cathybrid {

// Quadratures X1 = a + a^dag and X2 = i(a - a^dag); the vacuum has unit
// variance on both axes.
enum class Quadrature { X1, X2 };
const char* to_string(Quadrature q);

struct AxisSpec {
  double min = -6.0;
  double max = 6.0;
  int points = 301;

  std::vector<double> samples() const;
  double spacing() const;
  // Symmetric axis +-(2 beta + 6) with the default resolution.
  static AxisSpec for_beta(double beta, int points = 301);
};

struct WignerGrid {
  std::vector<double> x1;
  std::vector<double> x2;
  std::vector<double> values;  // values[i1 * x2.size() + i2] = W(x1[i1], x2[i2])

  double at(std::size_t i1, std::size_t i2) const { return values[i1 * x2.size() + i2]; }
  // Riemann sum of W dx1 dx2.
  double integral() const;
  // Integrate out one axis: returns the marginal density along the other.
  std::vector<double> marginal(Quadrature keep) const;
};

struct QuadratureDistribution {
  Quadrature axis = Quadrature::X1;
  std::vector<double> x;
  std::vector<double> density;

  double integral() const;
  double mean() const;
  double variance() const;
  // Indices of strict interior local maxima whose height exceeds `min_height`.
  std::vector<std::size_t> local_maxima(double min_height = 1e-6) const;
};

// W(x1, x2) of a pure state; the vacuum is exp(-(x1^2 + x2^2)/2) / (2 pi).
double wigner_at(const FockVector& state, double x1, double x2);
WignerGrid wigner(const FockVector& state, const AxisSpec& ax1, const AxisSpec& ax2,
                  double tail_tol = kDefaultTailTolerance);

// Same value via the displaced-parity identity on an enlarged space; used as an
// independent check of the kernel expansion.
double wigner_displaced_parity(const FockVector& state, double x1, double x2, int work_cutoff);

// Normalized oscillator eigenfunctions psi_0..psi_cutoff at x (vacuum variance 1).
std::vector<double> oscillator_eigenfunctions(int cutoff, double x);

QuadratureDistribution quadrature_distribution(const FockVector& state, Quadrature axis, const AxisSpec& grid,
                                               double tail_tol = kDefaultTailTolerance);

struct QuadratureMoments {
  double mean = 0.0;
  double second = 0.0;
  double sigma() const;
};
QuadratureMoments quadrature_moments(const FockVector& state, Quadrature axis);
double quadrature_sigma(const FockVector& state, Quadrature axis);

// <n> and <n^2>.
double mean_photon_number(const FockVector& state);
double photon_number_variance(const FockVector& state);
// <(Delta n)^2> / <n>; throws UndefinedMomentError for the vacuum.
double fano(const FockVector& state);

}  // namespace cathybrid
