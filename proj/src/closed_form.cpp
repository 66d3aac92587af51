#include "cathybrid/closed_form.hpp"

#include <cmath>
#include <string>

#include "cathybrid/displacement.hpp"
#include "cathybrid/entanglement.hpp"
#include "cathybrid/errors.hpp"

namespace cathybrid {

namespace {

double alt(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

double log_factorial(int k) { return std::lgamma(k + 1.0); }

void require_conditioned(double value, const char* what) {
  if (!(std::abs(value) >= kConditioningFloor)) {
    throw ConditioningError(std::string("closed form ill-conditioned: ") + what + " = " + num(value) +
                            "; use the direct evolution");
  }
}

void require_conditioned(Complex value, const char* what) { require_conditioned(std::abs(value), what); }

FockVector combination(const std::vector<Complex>& coeffs, Sign sign, double beta, double scale, int cutoff) {
  FockVector v(cutoff);
  for (std::size_t p = 0; p < coeffs.size(); ++p) {
    if (coeffs[p] == Complex{}) continue;
    v += coeffs[p] * sdlps_vector(static_cast<int>(p), sign, beta, cutoff);
  }
  v *= Complex(scale);
  return v;
}

struct Signs {
  Sign psi;
  Sign phi;
};

// The vacuum branch keeps the input parity shifted by n; the photon branch is opposite.
Signs branch_signs(Sign input, int n) {
  const Sign psi = sign_of(combine(parity_of(input), parity_of(n)));
  return {psi, psi == Sign::Plus ? Sign::Minus : Sign::Plus};
}

// 1 / (|a0|^2 + |a1|^2 |B|^2): the squared normalization of the heralded state.
double heralded_norm_sq(const DelocalizedPhoton& photon, Complex b) {
  return 1.0 / (std::norm(photon.a0()) + std::norm(photon.a1()) * std::norm(b));
}

}  // namespace

FockVector ClosedFormBranches::psi(int cutoff) const {
  return combination(x, psi_sign, reduced_beta, psi_norm, cutoff);
}

FockVector ClosedFormBranches::phi(int cutoff) const {
  return combination(y, phi_sign, reduced_beta, phi_norm, cutoff);
}

ClosedFormBranches closed_form_amplitudes(int l, Sign sign, int n, double beta, const BeamSplitterParams& params) {
  if (l < 0 || n < 0) throw RangeError("l and n must be nonnegative");
  const double t = params.t();
  const double r = params.r();
  const double br = beta * r;
  const double bt = beta * t;
  const Signs s = branch_signs(sign, n);

  const double c_l = displacement_coeff(l, n, br);
  const double c_l1 = displacement_coeff(l + 1, n, br);
  require_conditioned(c_l, "c_{l,n}(beta r)");
  require_conditioned(c_l1, "c_{l+1,n}(beta r)");
  require_conditioned(std::pow(r, l + 1), "r^(l+1)");

  ClosedFormBranches out;
  out.psi_sign = s.psi;
  out.phi_sign = s.phi;
  out.reduced_beta = bt;

  const double npsi0 = sdlps_norm_factor(0, s.psi, bt);
  const double nphi0 = sdlps_norm_factor(0, s.phi, bt);

  out.x.resize(static_cast<std::size_t>(l + 1));
  for (int p = 0; p <= l; ++p) {
    const double binom = std::exp(0.5 * (log_factorial(l) - log_factorial(p) - log_factorial(l - p)));
    out.x[static_cast<std::size_t>(p)] = alt(p) * std::pow(t / r, p) * binom * displacement_coeff(l - p, n, br) *
                                         npsi0 / (c_l * sdlps_norm_factor(p, s.psi, bt));
  }

  out.y.resize(static_cast<std::size_t>(l + 2));
  for (int p = 0; p <= l; ++p) {
    // sqrt(l! (l-p+1)!) / ((l-p)! sqrt((l+1) p!))
    const double comb = std::exp(0.5 * (log_factorial(l) + log_factorial(l - p + 1)) - log_factorial(l - p) -
                                 0.5 * (std::log(l + 1.0) + log_factorial(p)));
    const double mix = t * t - static_cast<double>(p) / (l - p + 1) * r * r;
    out.y[static_cast<std::size_t>(p)] = alt(p) * std::pow(t, p - 2) / std::pow(r, p) * comb *
                                         displacement_coeff(l - p + 1, n, br) * nphi0 /
                                         (c_l1 * sdlps_norm_factor(p, s.phi, bt)) * mix;
  }
  out.y[static_cast<std::size_t>(l + 1)] = alt(l) * std::pow(t / r, l - 1) * displacement_coeff(0, n, br) * nphi0 /
                                           (c_l1 * sdlps_norm_factor(l + 1, s.phi, bt));

  out.psi_norm = 1.0 / sdlps_combination_norm(out.x, s.psi, bt);
  out.phi_norm = 1.0 / sdlps_combination_norm(out.y, s.phi, bt);
  return out;
}

namespace {

Complex b_from_branches(int l, int n, double beta, const BeamSplitterParams& params, const ClosedFormBranches& br) {
  const double t = params.t();
  const double rb = beta * params.r();
  const double num = t * std::sqrt(l + 1.0) * displacement_coeff(l + 1, n, rb) *
                     sdlps_norm_factor(0, br.psi_sign, br.reduced_beta) * br.psi_norm;
  const double den = displacement_coeff(l, n, rb) * sdlps_norm_factor(0, br.phi_sign, br.reduced_beta) * br.phi_norm;
  return num / den;
}

double probability_from_branches(int l, Sign sign, int n, double beta, const BeamSplitterParams& params,
                                 const ClosedFormBranches& br, Complex b, const DelocalizedPhoton& photon) {
  const double rb = beta * params.r();
  const double f = displacement_prefactor(rb);
  const double c = displacement_coeff(l, n, rb);
  const double n_in = sdlps_norm_factor(l, sign, beta);
  const double n_psi0 = sdlps_norm_factor(0, br.psi_sign, br.reduced_beta);
  const double vacuum_weight = f * f * std::pow(params.r(), 2 * l) * c * c * n_in * n_in /
                               (n_psi0 * n_psi0 * br.psi_norm * br.psi_norm);
  return vacuum_weight / heralded_norm_sq(photon, b);
}

}  // namespace

Complex closed_form_B(int l, Sign sign, int n, double beta, const BeamSplitterParams& params) {
  const ClosedFormBranches br = closed_form_amplitudes(l, sign, n, beta, params);
  return b_from_branches(l, n, beta, params, br);
}

double closed_form_probability(int l, Sign sign, int n, double beta, const BeamSplitterParams& params,
                               const DelocalizedPhoton& photon) {
  return closed_form_outcome(l, sign, n, beta, params, photon).probability;
}

ClosedFormOutcome closed_form_outcome(int l, Sign sign, int n, double beta, const BeamSplitterParams& params,
                                      const DelocalizedPhoton& photon) {
  ClosedFormOutcome out;
  out.branches = closed_form_amplitudes(l, sign, n, beta, params);
  out.b_param = b_from_branches(l, n, beta, params, out.branches);
  out.probability = probability_from_branches(l, sign, n, beta, params, out.branches, out.b_param, photon);
  out.negativity = negativity_closed(photon.a0(), photon.a1(), std::abs(out.b_param));
  return out;
}

SuperpositionClosedForm superposition_closed_form(const std::vector<Complex>& b, Sign sign, int n, double beta,
                                                  const BeamSplitterParams& params, const DelocalizedPhoton& photon) {
  if (b.empty()) throw ConfigError("superposition coefficient list b is empty");
  if (n < 0) throw RangeError("n must be nonnegative");
  const int top = static_cast<int>(b.size()) - 1;
  const double t = params.t();
  const double r = params.r();
  const double br = beta * r;
  const double bt = beta * t;
  const Signs s = branch_signs(sign, n);

  // N_s^(j)(beta) b_j, zero where b_j vanishes so degenerate members are skipped.
  std::vector<Complex> weighted(b.size());
  for (int j = 0; j <= top; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    weighted[uj] = b[uj] == Complex{} ? Complex{} : b[uj] * sdlps_norm_factor(j, sign, beta);
  }

  SuperpositionClosedForm out;
  out.f.assign(b.size(), Complex{});
  out.g.assign(b.size(), Complex{});
  for (int p = 0; p <= top; ++p) {
    Complex fp{};
    Complex gp{};
    for (int j = p; j <= top; ++j) {
      const Complex w = weighted[static_cast<std::size_t>(j)];
      if (w == Complex{}) continue;
      const double rp = std::pow(r, j - p);
      fp += alt(j) * w * rp * displacement_coeff(j - p, n, br) *
            std::exp(0.5 * (log_factorial(j) - log_factorial(j - p)));
      const double mix = t * t - static_cast<double>(p) / (j - p + 1) * r * r;
      gp += alt(j) * w * rp * displacement_coeff(j - p + 1, n, br) *
            std::exp(0.5 * (log_factorial(j) + log_factorial(j - p + 1)) - log_factorial(j - p)) * mix;
    }
    out.f[static_cast<std::size_t>(p)] = fp;
    out.g[static_cast<std::size_t>(p)] = gp;
  }
  const Complex f0 = out.f[0];
  const Complex g0 = out.g[0];
  require_conditioned(f0, "f_0");
  require_conditioned(g0, "g_0");

  ClosedFormBranches& brs = out.outcome.branches;
  brs.psi_sign = s.psi;
  brs.phi_sign = s.phi;
  brs.reduced_beta = bt;
  const double npsi0 = sdlps_norm_factor(0, s.psi, bt);
  const double nphi0 = sdlps_norm_factor(0, s.phi, bt);

  brs.x.assign(b.size(), Complex{});
  brs.y.assign(b.size() + 1, Complex{});
  for (int p = 0; p <= top; ++p) {
    const auto up = static_cast<std::size_t>(p);
    const double scale = alt(p) * std::pow(t, p) / std::exp(0.5 * log_factorial(p));
    if (out.f[up] != Complex{}) brs.x[up] = scale * out.f[up] * npsi0 / (f0 * sdlps_norm_factor(p, s.psi, bt));
    if (out.g[up] != Complex{}) brs.y[up] = scale * out.g[up] * nphi0 / (g0 * sdlps_norm_factor(p, s.phi, bt));
  }
  // The photon promoted into mode 1 feeds |Omega^(p+1)> directly.
  const Complex lead = r * t * displacement_coeff(0, n, br) * nphi0 / g0;
  for (int p = 0; p <= top; ++p) {
    const Complex w = weighted[static_cast<std::size_t>(p)];
    if (w == Complex{}) continue;
    const double gp = std::pow(t, p) * std::sqrt(p + 1.0) / sdlps_norm_factor(p + 1, s.phi, bt);
    brs.y[static_cast<std::size_t>(p + 1)] += lead * w * gp;
  }

  brs.psi_norm = 1.0 / sdlps_combination_norm(brs.x, s.psi, bt);
  brs.phi_norm = 1.0 / sdlps_combination_norm(brs.y, s.phi, bt);

  out.outcome.b_param = g0 * npsi0 * brs.psi_norm / (t * f0 * nphi0 * brs.phi_norm);

  const double n_in = 1.0 / sdlps_combination_norm(b, sign, beta);
  const double f = displacement_prefactor(br);
  const double vacuum_weight =
      f * f * n_in * n_in * std::norm(f0) / (npsi0 * npsi0 * brs.psi_norm * brs.psi_norm);
  out.outcome.probability = vacuum_weight / heralded_norm_sq(photon, out.outcome.b_param);
  out.outcome.negativity = negativity_closed(photon.a0(), photon.a1(), std::abs(out.outcome.b_param));
  return out;
}

}  // namespace cathybrid
