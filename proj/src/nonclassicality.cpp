#include "cathybrid/nonclassicality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "cathybrid/displacement.hpp"
#include "cathybrid/errors.hpp"

namespace cathybrid {

namespace {

constexpr double kInvTwoPi = 0.5 * std::numbers::inv_pi;

// M[n * dim + m] = <n|D(z)|m> by the ladder recurrences
//   sqrt(n) M[n][m] = z M[n-1][m] + sqrt(m) M[n-1][m-1]
//   sqrt(m) M[0][m] = -conj(z) M[0][m-1].
void displacement_kernel(Complex z, int cutoff, std::vector<Complex>& out) {
  const auto dim = static_cast<std::size_t>(cutoff + 1);
  out.assign(dim * dim, Complex{});
  std::vector<double> root(dim);
  for (std::size_t k = 0; k < dim; ++k) root[k] = std::sqrt(static_cast<double>(k));
  out[0] = std::exp(-0.5 * std::norm(z));
  for (std::size_t m = 1; m < dim; ++m) out[m] = -std::conj(z) * out[m - 1] / root[m];
  for (std::size_t n = 1; n < dim; ++n) {
    const Complex* prev = &out[(n - 1) * dim];
    Complex* row = &out[n * dim];
    row[0] = z * prev[0] / root[n];
    for (std::size_t m = 1; m < dim; ++m) row[m] = (z * prev[m] + root[m] * prev[m - 1]) / root[n];
  }
}

double wigner_kernel_sum(const FockVector& state, double x1, double x2, std::vector<Complex>& scratch) {
  const int cutoff = state.cutoff();
  const auto dim = static_cast<std::size_t>(cutoff + 1);
  displacement_kernel(Complex(x1, -x2), cutoff, scratch);
  Complex total{};
  for (std::size_t m = 0; m < dim; ++m) {
    if (state[m] == Complex{}) continue;
    Complex col{};
    for (std::size_t n = 0; n < dim; ++n) col += std::conj(state[n]) * scratch[n * dim + m];
    total += ((m % 2 == 0) ? 1.0 : -1.0) * state[m] * col;
  }
  return kInvTwoPi * total.real();
}

// <k|D(alpha)|m> from the Laguerre closed form.
Complex displacement_element(int k, int m, Complex alpha) {
  const double r2 = std::norm(alpha);
  const double g = std::exp(-0.5 * r2);
  if (k >= m) {
    const double scale = std::exp(0.5 * (std::lgamma(m + 1.0) - std::lgamma(k + 1.0)));
    return scale * std::pow(alpha, k - m) * g * assoc_laguerre(m, k - m, r2);
  }
  const double scale = std::exp(0.5 * (std::lgamma(k + 1.0) - std::lgamma(m + 1.0)));
  return scale * std::pow(-std::conj(alpha), m - k) * g * assoc_laguerre(k, m - k, r2);
}

}  // namespace

const char* to_string(Quadrature q) { return q == Quadrature::X1 ? "X1" : "X2"; }

std::vector<double> AxisSpec::samples() const {
  if (points < 2 || !(max > min)) throw ConfigError("axis needs at least two points over a nonempty range");
  std::vector<double> xs(static_cast<std::size_t>(points));
  const double h = spacing();
  for (int i = 0; i < points; ++i) xs[static_cast<std::size_t>(i)] = min + h * i;
  return xs;
}

double AxisSpec::spacing() const { return (max - min) / (points - 1); }

AxisSpec AxisSpec::for_beta(double beta, int points) {
  const double half = 2.0 * beta + 6.0;
  return AxisSpec{-half, half, points};
}

double WignerGrid::integral() const {
  if (x1.size() < 2 || x2.size() < 2) return 0.0;
  double s = 0.0;
  for (const double v : values) s += v;
  return s * (x1[1] - x1[0]) * (x2[1] - x2[0]);
}

std::vector<double> WignerGrid::marginal(Quadrature keep) const {
  const bool keep_x1 = keep == Quadrature::X1;
  const std::size_t n_keep = keep_x1 ? x1.size() : x2.size();
  const std::size_t n_sum = keep_x1 ? x2.size() : x1.size();
  const double h = keep_x1 ? (x2[1] - x2[0]) : (x1[1] - x1[0]);
  std::vector<double> out(n_keep, 0.0);
  for (std::size_t i = 0; i < n_keep; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n_sum; ++j) s += keep_x1 ? at(i, j) : at(j, i);
    out[i] = s * h;
  }
  return out;
}

double QuadratureDistribution::integral() const {
  double s = 0.0;
  for (const double p : density) s += p;
  return x.size() < 2 ? 0.0 : s * (x[1] - x[0]);
}

double QuadratureDistribution::mean() const {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * density[i];
  return s * (x[1] - x[0]);
}

double QuadratureDistribution::variance() const {
  const double mu = mean();
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] - mu) * (x[i] - mu) * density[i];
  return s * (x[1] - x[0]);
}

std::vector<std::size_t> QuadratureDistribution::local_maxima(double min_height) const {
  std::vector<std::size_t> peaks;
  for (std::size_t i = 1; i + 1 < density.size(); ++i) {
    if (density[i] > density[i - 1] && density[i] > density[i + 1] && density[i] > min_height) peaks.push_back(i);
  }
  return peaks;
}

double wigner_at(const FockVector& state, double x1, double x2) {
  std::vector<Complex> scratch;
  return wigner_kernel_sum(state, x1, x2, scratch);
}

WignerGrid wigner(const FockVector& state, const AxisSpec& ax1, const AxisSpec& ax2, double tail_tol) {
  check_tail(state, tail_tol, "Wigner input");
  WignerGrid grid{ax1.samples(), ax2.samples(), {}};
  grid.values.assign(grid.x1.size() * grid.x2.size(), 0.0);

  const std::size_t rows = grid.x1.size();
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 16u));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      std::vector<Complex> scratch;
      for (std::size_t i = w; i < rows; i += workers) {
        for (std::size_t j = 0; j < grid.x2.size(); ++j) {
          grid.values[i * grid.x2.size() + j] = wigner_kernel_sum(state, grid.x1[i], grid.x2[j], scratch);
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  return grid;
}

double wigner_displaced_parity(const FockVector& state, double x1, double x2, int work_cutoff) {
  // W = (1/2pi) sum_k (-1)^k |<k|D(-gamma)|psi>|^2 with gamma = (x1 - i x2)/2.
  const Complex minus_gamma(-0.5 * x1, 0.5 * x2);
  double w = 0.0;
  for (int k = 0; k <= work_cutoff; ++k) {
    Complex amp{};
    for (int m = 0; m <= state.cutoff(); ++m) {
      if (state[static_cast<std::size_t>(m)] == Complex{}) continue;
      amp += displacement_element(k, m, minus_gamma) * state[static_cast<std::size_t>(m)];
    }
    w += ((k % 2 == 0) ? 1.0 : -1.0) * std::norm(amp);
  }
  return kInvTwoPi * w;
}

std::vector<double> oscillator_eigenfunctions(int cutoff, double x) {
  std::vector<double> psi(static_cast<std::size_t>(cutoff + 1));
  psi[0] = std::pow(2.0 * std::numbers::pi, -0.25) * std::exp(-0.25 * x * x);
  if (cutoff >= 1) psi[1] = x * psi[0];
  for (int n = 1; n < cutoff; ++n) {
    psi[static_cast<std::size_t>(n + 1)] =
        (x * psi[static_cast<std::size_t>(n)] - std::sqrt(static_cast<double>(n)) * psi[static_cast<std::size_t>(n - 1)]) /
        std::sqrt(n + 1.0);
  }
  return psi;
}

QuadratureDistribution quadrature_distribution(const FockVector& state, Quadrature axis, const AxisSpec& grid,
                                               double tail_tol) {
  check_tail(state, tail_tol, "quadrature input");
  // X2 is X1 after the rotation a -> i a, i.e. amplitudes pick up i^n.
  std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
  if (axis == Quadrature::X2) {
    const Complex phases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (std::size_t n = 0; n < amps.size(); ++n) amps[n] *= phases[n % 4];
  }
  QuadratureDistribution out{axis, grid.samples(), {}};
  out.density.reserve(out.x.size());
  for (const double x : out.x) {
    const auto psi = oscillator_eigenfunctions(state.cutoff(), x);
    Complex s{};
    for (std::size_t n = 0; n < amps.size(); ++n) s += amps[n] * psi[n];
    out.density.push_back(std::norm(s));
  }
  return out;
}

double QuadratureMoments::sigma() const { return std::sqrt(std::max(second - mean * mean, 0.0)); }

QuadratureMoments quadrature_moments(const FockVector& state, Quadrature axis) {
  Complex a1{};
  Complex a2{};
  double n_mean = 0.0;
  for (int n = 0; n <= state.cutoff(); ++n) {
    const Complex cn = state[static_cast<std::size_t>(n)];
    n_mean += n * std::norm(cn);
    a1 += std::conj(cn) * state.at_or_zero(n + 1) * std::sqrt(n + 1.0);
    a2 += std::conj(cn) * state.at_or_zero(n + 2) * std::sqrt((n + 1.0) * (n + 2.0));
  }
  const double norm = state.norm_squared();
  QuadratureMoments m;
  if (axis == Quadrature::X1) {
    m.mean = 2.0 * a1.real() / norm;
    m.second = (2.0 * a2.real() + 2.0 * n_mean) / norm + 1.0;
  } else {
    m.mean = -2.0 * a1.imag() / norm;
    m.second = (-2.0 * a2.real() + 2.0 * n_mean) / norm + 1.0;
  }
  return m;
}

double quadrature_sigma(const FockVector& state, Quadrature axis) { return quadrature_moments(state, axis).sigma(); }

double mean_photon_number(const FockVector& state) {
  double s = 0.0;
  for (int n = 0; n <= state.cutoff(); ++n) s += n * std::norm(state[static_cast<std::size_t>(n)]);
  return s / state.norm_squared();
}

double photon_number_variance(const FockVector& state) {
  double s1 = 0.0;
  double s2 = 0.0;
  for (int n = 0; n <= state.cutoff(); ++n) {
    const double p = std::norm(state[static_cast<std::size_t>(n)]);
    s1 += n * p;
    s2 += static_cast<double>(n) * n * p;
  }
  const double norm = state.norm_squared();
  s1 /= norm;
  s2 /= norm;
  return s2 - s1 * s1;
}

double fano(const FockVector& state) {
  const double mean = mean_photon_number(state);
  if (!(mean > 1e-300)) throw UndefinedMomentError("Fano factor is undefined for the vacuum");
  return photon_number_variance(state) / mean;
}

}  // namespace cathybrid
