#include "cathybrid/state_family.hpp"

#include <cmath>

#include "cathybrid/displacement.hpp"
#include "cathybrid/errors.hpp"

namespace cathybrid {

namespace {

constexpr double kMinRadicand = 1e-300;

double alt(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

bool all_zero(const std::vector<Complex>& xs) {
  for (const auto& x : xs) {
    if (x != Complex{}) return false;
  }
  return true;
}

}  // namespace

const char* to_string(Sign s) { return s == Sign::Plus ? "+" : "-"; }

const char* to_string(StateKind k) {
  switch (k) {
    case StateKind::Sdlps:
      return "sdlps";
    case StateKind::Superposition:
      return "superposition";
    case StateKind::Truncated:
      return "truncated";
  }
  return "?";
}

StateSpec StateSpec::sdlps(int l, Sign sign, double beta) {
  StateSpec s;
  s.kind = StateKind::Sdlps;
  s.sign = sign;
  s.beta = beta;
  s.l = l;
  return s;
}

StateSpec StateSpec::superposition(std::vector<Complex> b, Sign sign, double beta) {
  StateSpec s;
  s.kind = StateKind::Superposition;
  s.sign = sign;
  s.beta = beta;
  s.b = std::move(b);
  return s;
}

StateSpec StateSpec::truncated(std::vector<Complex> d, Sign sign) {
  StateSpec s;
  s.kind = StateKind::Truncated;
  s.sign = sign;
  s.d = std::move(d);
  return s;
}

StateSpec StateSpec::truncated_from_sdlps(int l, Sign sign, double beta, int terms) {
  if (terms <= 0) throw ConfigError("truncated state needs at least one term");
  std::vector<Complex> d;
  const int offset = sign == Sign::Plus ? 0 : 1;
  for (int m = 0; m < terms; ++m) d.emplace_back(displacement_coeff(l, 2 * m + offset, beta));
  StateSpec s = truncated(std::move(d), sign);
  s.beta = beta;
  s.l = l;
  return s;
}

void StateSpec::validate() const {
  switch (kind) {
    case StateKind::Sdlps:
      if (l < 0) throw ConfigError("l must be nonnegative");
      [[fallthrough]];
    case StateKind::Superposition:
      if (!std::isfinite(beta) || beta < 0.0) throw ConfigError("beta must be a nonnegative real number");
      if (kind == StateKind::Superposition) {
        if (b.empty()) throw ConfigError("superposition coefficient list b is empty");
        if (all_zero(b)) throw ConfigError("superposition coefficients b are all zero");
      }
      break;
    case StateKind::Truncated:
      if (d.empty()) throw ConfigError("truncated coefficient list d is empty");
      if (all_zero(d)) throw ConfigError("truncated coefficients d are all zero");
      break;
  }
}

int StateSpec::top_level() const {
  if (kind != StateKind::Truncated) throw ConfigError("only truncated states have a top level");
  int top = -1;
  for (std::size_t m = 0; m < d.size(); ++m) {
    if (d[m] != Complex{}) top = static_cast<int>(2 * m) + (sign == Sign::Plus ? 0 : 1);
  }
  return top;
}

double sdlps_norm_factor(int l, Sign sign, double beta) {
  if (l < 0) throw RangeError("l must be nonnegative");
  // <l|D(2 beta)|l> = exp(-x/2) L_l(x), x = 4 beta^2; no range limit needed here
  const double x = 4.0 * beta * beta;
  const double overlap = std::exp(-0.5 * x) * assoc_laguerre(l, 0, x);
  const double radicand = 2.0 * (1.0 + sign_value(sign) * alt(l) * overlap);
  if (!(radicand > kMinRadicand)) {
    throw DegenerateStateError("|Omega_" + std::string(to_string(sign)) + "^(" + std::to_string(l) +
                               ")> vanishes at beta = " + num(beta));
  }
  return 1.0 / std::sqrt(radicand);
}

FockVector sdlps_vector(int l, Sign sign, double beta, int cutoff, double tail_tol) {
  if (cutoff < kTailLevels || cutoff > kMaxFockIndex) throw RangeError("cutoff outside supported range");
  const double norm = sdlps_norm_factor(l, sign, beta);
  const double f = displacement_prefactor(beta);
  // Even members live on |2m>, odd members on |2m+1>.
  const int offset = sign == Sign::Plus ? 0 : 1;
  const double lead = (sign == Sign::Plus ? alt(l) : alt(l + 1)) * 2.0 * norm * f;
  FockVector v(cutoff);
  for (int n = offset; n <= cutoff; n += 2) v[static_cast<std::size_t>(n)] = lead * displacement_coeff(l, n, beta);
  check_tail(v, tail_tol, "SDlPS");
  return v;
}

NormalizedState build(const StateSpec& spec, int cutoff, double tail_tol) {
  spec.validate();
  NormalizedState out{spec, FockVector(cutoff), 0.0};
  switch (spec.kind) {
    case StateKind::Sdlps: {
      out.norm_factor = sdlps_norm_factor(spec.l, spec.sign, spec.beta);
      out.vector = sdlps_vector(spec.l, spec.sign, spec.beta, cutoff, tail_tol).normalized();
      break;
    }
    case StateKind::Superposition: {
      const double raw = sdlps_combination_norm(spec.b, spec.sign, spec.beta);
      if (!(raw > 1e-150)) throw DegenerateStateError("superposition has zero norm");
      out.norm_factor = 1.0 / raw;
      FockVector sum(cutoff);
      for (std::size_t k = 0; k < spec.b.size(); ++k) {
        if (spec.b[k] == Complex{}) continue;
        sum += spec.b[k] * sdlps_vector(static_cast<int>(k), spec.sign, spec.beta, cutoff, tail_tol);
      }
      sum *= Complex(out.norm_factor);
      out.vector = sum.normalized();
      break;
    }
    case StateKind::Truncated: {
      const int offset = spec.sign == Sign::Plus ? 0 : 1;
      const int top = static_cast<int>(2 * (spec.d.size() - 1)) + offset;
      if (top > cutoff) {
        throw DimensionError("truncated state reaches |" + std::to_string(top) + "> beyond cutoff " +
                             std::to_string(cutoff));
      }
      FockVector v(cutoff);
      for (std::size_t m = 0; m < spec.d.size(); ++m) v[2 * m + static_cast<std::size_t>(offset)] = spec.d[m];
      out.norm_factor = 1.0 / v.norm();
      out.vector = v.normalized();
      break;
    }
  }
  return out;
}

double overlap_closed_form(int k, int m, Sign sign, double beta) {
  const double nk = sdlps_norm_factor(k, sign, beta);
  const double nm = sdlps_norm_factor(m, sign, beta);
  const double cross = displacement_prefactor(2.0 * beta) * displacement_coeff(m, k, 2.0 * beta);
  return 2.0 * nk * nm * ((k == m ? 1.0 : 0.0) + sign_value(sign) * alt(m) * cross);
}

double overlap_closed_form(int k, Sign sign_k, int m, Sign sign_m, double beta) {
  if (sign_k != sign_m) return 0.0;
  return overlap_closed_form(k, m, sign_k, beta);
}

std::vector<double> sdlps_gram(Sign sign, double beta, int top) {
  const auto dim = static_cast<std::size_t>(top + 1);
  std::vector<double> g(dim * dim);
  for (int j = 0; j <= top; ++j) {
    for (int k = 0; k <= top; ++k) g[static_cast<std::size_t>(j) * dim + static_cast<std::size_t>(k)] =
        overlap_closed_form(j, k, sign, beta);
  }
  return g;
}

double sdlps_combination_norm(const std::vector<Complex>& coeffs, Sign sign, double beta) {
  const int top = static_cast<int>(coeffs.size()) - 1;
  if (top < 0) return 0.0;
  const auto dim = coeffs.size();
  // Skip vanishing members so a zero coefficient on a degenerate member is harmless.
  std::vector<double> gram(dim * dim, 0.0);
  for (std::size_t j = 0; j < dim; ++j) {
    if (coeffs[j] == Complex{}) continue;
    for (std::size_t k = 0; k < dim; ++k) {
      if (coeffs[k] == Complex{}) continue;
      gram[j * dim + k] = overlap_closed_form(static_cast<int>(j), static_cast<int>(k), sign, beta);
    }
  }
  Complex s{};
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = 0; k < dim; ++k) s += std::conj(coeffs[j]) * coeffs[k] * gram[j * dim + k];
  }
  return std::sqrt(std::max(s.real(), 0.0));
}

}  // namespace cathybrid
