#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cathybrid/closed_form.hpp"
#include "cathybrid/displacement.hpp"
#include "cathybrid/entanglement.hpp"
#include "cathybrid/errors.hpp"
#include "cathybrid/hybrid.hpp"
#include "cathybrid/nonclassicality.hpp"
#include "cathybrid/state_family.hpp"
#include "cathybrid/sweep.hpp"
#include "oracles.hpp"

using namespace cathybrid;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

const DelocalizedPhoton kBalanced = DelocalizedPhoton::balanced();
constexpr int kCutoff = kDefaultCutoff;

struct GridCell {
  int l;
  Sign sign;
  int n;
  double beta;
  double t;
};

std::vector<GridCell> reference_grid() {
  std::vector<GridCell> cells;
  for (int l = 0; l <= 3; ++l)
    for (Sign s : {Sign::Plus, Sign::Minus})
      for (int n = 0; n <= 4; ++n)
        for (double beta : {0.5, 1.0, 2.0})
          for (double t : {0.3, 0.5, 0.7}) cells.push_back({l, s, n, beta, t});
  return cells;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

Verdict maximal_points() {
  struct Row {
    StateSpec spec;
    int n;
    double p, beta, t;
    const char* name;
  };
  const std::vector<Complex> b11{1.0, 1.0};
  std::vector<Row> rows{
      {StateSpec::sdlps(0, Sign::Plus, 0.5), 0, 0.939, 0.5, 0.25, "O+0"},
      {StateSpec::sdlps(0, Sign::Plus, 1.4), 1, 0.288, 1.4, 0.65, "O+0"},
      {StateSpec::sdlps(1, Sign::Plus, 0.5), 0, 0.491, 0.5, 0.73, "O+1"},
      {StateSpec::sdlps(1, Sign::Plus, 0.5), 1, 0.301, 0.5, 0.61, "O+1"},
      {StateSpec::sdlps(0, Sign::Minus, 0.5), 0, 0.544, 0.5, 0.79, "O-0"},
      {StateSpec::sdlps(0, Sign::Minus, 0.5), 1, 0.843, 0.5, 0.25, "O-0"},
      {StateSpec::sdlps(1, Sign::Minus, 0.5), 0, 0.523, 0.5, 0.8, "O-1"},
      {StateSpec::sdlps(1, Sign::Minus, 2.1), 1, 0.278, 2.1, 0.96, "O-1"},
      {StateSpec::superposition(b11, Sign::Plus, 0.92), 0, 0.938, 0.92, 0.25, "even"},
      {StateSpec::superposition(b11, Sign::Plus, 1.9), 1, 0.291, 1.9, 0.62, "even"},
      {StateSpec::superposition(b11, Sign::Minus, 1.34), 0, 0.509, 1.34, 0.8, "odd"},
      {StateSpec::superposition(b11, Sign::Minus, 0.5), 1, 0.31, 0.5, 0.68, "odd"},
  };
  Verdict v;
  double worst_n = 1.0, worst_dp = 0.0;
  for (const auto& row : rows) {
    const auto res = evolve_and_condition(build(row.spec, kCutoff), kBalanced, BeamSplitterParams(row.t), row.n);
    const double dp = std::abs(res.probability - row.p);
    worst_n = std::min(worst_n, res.negativity);
    worst_dp = std::max(worst_dp, dp);
    if (res.negativity < 0.98 || dp > 0.02) {
      v.pass = false;
      v.detail += std::string(" ") + row.name + fmt(" n=%g: N=%.4f P=%.4f", row.n, res.negativity, res.probability);
    }
  }
  v.detail = fmt("12 rows, min N = %.4f, max |dP| = %.4f", worst_n, worst_dp) + v.detail;
  return v;
}

Verdict closed_form_equivalence() {
  Verdict v;
  int compared = 0, guarded = 0;
  double worst_f = 0, worst_b = 0, worst_p = 0;
  for (const auto& c : reference_grid()) {
    const BeamSplitterParams bs(c.t);
    const auto in = oracle::raw_sdlps(c.l, sign_value(c.sign), c.beta, kCutoff);
    const auto ref = oracle::herald(in, c.t, c.n, kBalanced.a0(), kBalanced.a1());
    ClosedFormOutcome cf;
    try {
      cf = closed_form_outcome(c.l, c.sign, c.n, c.beta, bs, kBalanced);
    } catch (const ConditioningError&) {
      ++guarded;
      continue;
    }
    ++compared;
    const double f = std::max(infidelity(cf.branches.psi(kCutoff + 1), ref.psi),
                              infidelity(cf.branches.phi(kCutoff + 1), ref.phi));
    const double db = std::abs(std::abs(cf.b_param) - ref.b_abs);
    const double dp = std::abs(cf.probability - ref.probability);
    worst_f = std::max(worst_f, f);
    worst_b = std::max(worst_b, db);
    worst_p = std::max(worst_p, dp);
    if (f > 1e-9 || db > 1e-9 || dp > 1e-9) {
      if (v.pass) v.detail += fmt(" first bad cell l=%g n=%g beta=%g t=%g", c.l, c.n, c.beta, c.t);
      v.pass = false;
    }
  }
  v.detail = fmt("%g cells compared, %g guarded; worst 1-F = %.1e, |dB| = %.1e, |dP| = %.1e", compared, guarded,
                 worst_f, std::max(worst_b, worst_p)) +
             v.detail;
  return v;
}

Verdict completeness() {
  Verdict v;
  double worst = 0;
  int inputs = 0;
  for (int l = 0; l <= 3; ++l)
    for (Sign s : {Sign::Plus, Sign::Minus})
      for (double beta : {0.5, 1.0, 2.0})
        for (double t : {0.3, 0.5, 0.7}) {
          const auto dist = outcome_distribution(build(StateSpec::sdlps(l, s, beta), kCutoff), kBalanced,
                                                 BeamSplitterParams(t));
          double sum = 0;
          for (const auto& r : dist) sum += r.probability;
          worst = std::max(worst, std::abs(sum - 1.0));
          ++inputs;
        }
  v.pass = worst <= 1e-8;
  v.detail = fmt("%g inputs, max |sum P - 1| = %.1e", inputs, worst);
  return v;
}

Verdict parity_law() {
  Verdict v;
  double worst = 0;
  int combos = 0;
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    for (int n : {0, 1, 2, 3}) {
      for (int l = 0; l <= 2; ++l) {
        const auto res = evolve_and_condition(build(StateSpec::sdlps(l, s, 1.3), kCutoff), kBalanced,
                                              BeamSplitterParams(0.6), n);
        const auto want = expected_parities(parity_of(s), n);
        const double wrong = std::max(mass_of_parity(res.psi, flip(want.psi)), mass_of_parity(res.phi, flip(want.phi)));
        worst = std::max(worst, wrong);
        if (res.psi_parity != want.psi || res.phi_parity != want.phi) v.pass = false;
        // even input with even n gives an even psi; odd n swaps
        const Parity table = (parity_of(s) == parity_of(n)) ? Parity::Even : Parity::Odd;
        if (want.psi != table) v.pass = false;
      }
      ++combos;
    }
  }
  v.pass = v.pass && worst <= 1e-20;
  v.detail = fmt("%g (input, outcome) cases over 4 parity combinations, max wrong-parity mass = %.1e", combos, worst);
  return v;
}

Verdict ppt_agreement() {
  Verdict v;
  double worst = 0;
  int count = 0;
  for (const auto& c : reference_grid()) {
    const auto res = evolve_and_condition(build(StateSpec::sdlps(c.l, c.sign, c.beta), kCutoff), kBalanced,
                                          BeamSplitterParams(c.t), c.n);
    const double ppt = negativity_ppt(BipartiteState::from_result(res, kBalanced));
    const double closed = negativity_closed(kBalanced.a0(), kBalanced.a1(), res.b_abs());
    worst = std::max(worst, std::abs(ppt - closed));
    ++count;
  }
  v.pass = worst <= 1e-9;
  v.detail = fmt("%g results, max |N_ppt - N_closed| = %.1e", count, worst);
  return v;
}

Verdict deterministic() {
  Verdict v;
  double min_n = 1.0;
  int cells = 0;
  for (int l = 0; l <= 1; ++l)
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      RunConfig cfg;
      cfg.input = StateSpec::sdlps(l, s, 1.0);
      cfg.outcomes = {0, 1};
      cfg.beta = {0.3, 3.0, 20};
      cfg.t = {0.1, 0.9, 20};
      const auto grid = sweep(cfg);
      for (const auto& cell : grid.cells) {
        min_n = std::min(min_n, cell.negativity);
        ++cells;
      }
    }
  v.pass = min_n > 0.0;
  v.detail = fmt("%g cells, min negativity = %.3e", cells, min_n);
  return v;
}

Verdict forbidden_outcome() {
  Verdict v;
  double worst_forbidden = 0, min_allowed = 1;
  int allowed = 0;
  struct Case {
    StateSpec spec;
    int forbidden;
  };
  std::vector<Case> cases;
  for (int top_m = 0; top_m <= 3; ++top_m) {
    // even: top level 2 top_m, odd: top level 2 top_m + 1
    cases.push_back({StateSpec::truncated_from_sdlps(0, Sign::Plus, 1.2, top_m + 1), 2 * top_m + 1});
    cases.push_back({StateSpec::truncated_from_sdlps(2, Sign::Plus, 0.9, top_m + 1), 2 * top_m + 1});
    std::vector<Complex> d;
    for (int m = 0; m <= top_m; ++m) d.emplace_back(1.0 / (m + 1.0), 0.3 * m);
    cases.push_back({StateSpec::truncated(d, Sign::Plus), 2 * top_m + 1});
  }
  for (const auto& c : cases) {
    for (double t : {0.2, 0.5, 0.8}) {
      const auto dist = outcome_distribution(build(c.spec, 16), kBalanced, BeamSplitterParams(t));
      for (const auto& r : dist) {
        if (r.n == c.forbidden) {
          worst_forbidden = std::max(worst_forbidden, r.negativity);
          if (!r.separable) v.pass = false;
        } else if (r.probability > 1e-6) {
          min_allowed = std::min(min_allowed, r.negativity);
          ++allowed;
        }
      }
    }
  }
  v.pass = v.pass && worst_forbidden <= 1e-12 && min_allowed > 0;
  v.detail = fmt("forbidden outcome max N = %.1e; %g allowed outcomes, min N = %.3e", worst_forbidden, allowed,
                 min_allowed);
  return v;
}

Verdict nonclassicality() {
  Verdict v;
  std::vector<std::string> fails;
  auto sd = [](int l, Sign s, double beta) { return build(StateSpec::sdlps(l, s, beta), kCutoff).vector; };
  auto even = [](double beta) {
    return build(StateSpec::superposition({1.0, 1.0}, Sign::Plus, beta), kCutoff).vector;
  };

  // (a)
  const double wa0 = wigner_at(sd(0, Sign::Minus, 2.0), 0, 0);
  const double wa1 = wigner_at(sd(1, Sign::Minus, 2.0), 0, 0);
  if (!(wa0 < 0 && wa1 < 0)) fails.push_back("a");

  // (b), (c)
  double worst_marg = 0, worst_int = 0;
  for (const auto& s : {sd(0, Sign::Plus, 2.0), sd(1, Sign::Minus, 2.0)}) {
    const AxisSpec ax = AxisSpec::for_beta(2.0);
    const auto w = wigner(s, ax, ax);
    worst_int = std::max(worst_int, std::abs(w.integral() - 1.0));
    for (Quadrature q : {Quadrature::X1, Quadrature::X2}) {
      const auto m = w.marginal(q);
      const auto d = quadrature_distribution(s, q, ax);
      for (std::size_t i = 0; i < m.size(); ++i) worst_marg = std::max(worst_marg, std::abs(m[i] - d.density[i]));
    }
  }
  if (worst_marg > 1e-4) fails.push_back("b");
  if (worst_int > 1e-3) fails.push_back("c");

  // (d), (e)
  double min_even = 10, min_cat = 10, min_product = 10;
  for (int i = 1; i <= 19; ++i) {
    const double beta = 0.05 * i;
    for (const auto& s : {even(beta), sd(0, Sign::Plus, beta)}) {
      const double s1 = quadrature_sigma(s, Quadrature::X1), s2 = quadrature_sigma(s, Quadrature::X2);
      min_product = std::min(min_product, s1 * s2);
    }
    const auto e = even(beta);
    min_even = std::min({min_even, quadrature_sigma(e, Quadrature::X1), quadrature_sigma(e, Quadrature::X2)});
    if (beta <= 0.5) {
      const auto c = sd(0, Sign::Plus, beta);
      min_cat = std::min({min_cat, quadrature_sigma(c, Quadrature::X1), quadrature_sigma(c, Quadrature::X2)});
    }
  }
  for (int l = 0; l <= 2; ++l)
    for (Sign s : {Sign::Plus, Sign::Minus})
      for (double beta : {0.3, 1.0, 2.0, 3.0}) {
        const auto st = sd(l, s, beta);
        min_product = std::min(min_product, quadrature_sigma(st, Quadrature::X1) * quadrature_sigma(st, Quadrature::X2));
      }
  if (!(min_even < 1 && min_cat < 1)) fails.push_back("d");
  if (min_product < 1 - 1e-9) fails.push_back("e");

  // (f)
  const double fano_odd = fano(sd(0, Sign::Minus, 0.1));
  const double fano_coh = fano(displaced_number_state(0, 2.0, kCutoff));
  if (!(fano_odd < 1 && std::abs(fano_coh - 1) <= 1e-8)) fails.push_back("f");

  // (g)
  const auto cat = sd(0, Sign::Plus, 2.0);
  const auto p1 = quadrature_distribution(cat, Quadrature::X1, AxisSpec::for_beta(2.0));
  const auto p2 = quadrature_distribution(cat, Quadrature::X2, AxisSpec::for_beta(2.0));
  const auto m1 = p1.local_maxima(1e-3), m2 = p2.local_maxima(1e-3);
  bool bimodal = m1.size() == 2;
  for (auto i : m1) bimodal = bimodal && std::abs(p1.x[i]) > 2;
  if (!(bimodal && m2.size() >= 3)) fails.push_back("g");

  v.pass = fails.empty();
  v.detail = fmt("W0(O-0) = %.4f, W0(O-1) = %.4f, marginal err %.1e, ", wa0, wa1, worst_marg) +
             fmt("integral err %.1e, min sigma even %.4f cat %.4f, ", worst_int, min_even, min_cat) +
             fmt("min s1*s2 = %.6f, Fano(O-0,0.1) = %.4f, Fano(coh) - 1 = %.1e, ", min_product, fano_odd, fano_coh - 1) +
             fmt("maxima X1 %g X2 %g", m1.size(), m2.size());
  for (const auto& f : fails) v.detail += " [failed " + f + "]";
  return v;
}

Verdict displacement_invariants() {
  Verdict v;
  double sign_defect = 0, unit_defect = 0, overlap_err = 0;
  // rows kept clear of the point where row n leaks past index 128
  const std::vector<std::pair<double, int>> probes{
      {0.3, kCutoff - kTailLevels}, {1.0, kCutoff - kTailLevels}, {2.0, kCutoff - kTailLevels}, {3.5, 30}, {5.0, 8}};
  for (const auto& [alpha, rows] : probes) {
    const DisplacementTable plus(alpha, kCutoff), minus(-alpha, kCutoff);
    sign_defect = std::max(sign_defect, plus.sign_symmetry_defect(minus));
    unit_defect = std::max(unit_defect, plus.row_orthonormality_defect(rows));
  }
  for (Sign s : {Sign::Plus, Sign::Minus})
    for (double beta : {0.5, 1.0, 2.0, 3.0})
      for (int k = 0; k <= 4; ++k)
        for (int m = 0; m <= 4; ++m) {
          const auto a = oracle::raw_sdlps(k, sign_value(s), beta, kCutoff);
          const auto b = oracle::raw_sdlps(m, sign_value(s), beta, kCutoff);
          overlap_err = std::max(overlap_err, std::abs(inner_product(a, b).real() - overlap_closed_form(k, m, s, beta)));
        }
  v.pass = sign_defect <= 1e-12 && unit_defect <= 1e-10 && overlap_err <= 1e-9;
  v.detail = fmt("sign law %.1e, unitarity %.1e, overlap %.1e", sign_defect, unit_defect, overlap_err);
  return v;
}

Verdict superposition_reduction() {
  Verdict v;
  double worst = 0;
  int compared = 0, guarded = 0;
  for (int l = 0; l <= 3; ++l)
    for (Sign s : {Sign::Plus, Sign::Minus})
      for (int n = 0; n <= 4; ++n)
        for (double beta : {0.5, 1.0, 2.0})
          for (double t : {0.3, 0.5, 0.7}) {
            std::vector<Complex> b(static_cast<std::size_t>(l) + 1, 0.0);
            b[static_cast<std::size_t>(l)] = 1.0;
            const BeamSplitterParams bs(t);
            ClosedFormOutcome single;
            SuperpositionClosedForm sup;
            try {
              single = closed_form_outcome(l, s, n, beta, bs, kBalanced);
              sup = superposition_closed_form(b, s, n, beta, bs, kBalanced);
            } catch (const ConditioningError&) {
              ++guarded;
              continue;
            }
            ++compared;
            double d = std::abs(std::abs(single.b_param) - std::abs(sup.outcome.b_param));
            d = std::max(d, std::abs(single.probability - sup.outcome.probability));
            for (std::size_t p = 0; p < single.branches.x.size(); ++p)
              d = std::max(d, std::abs(single.branches.x[p] - sup.outcome.branches.x[p]));
            for (std::size_t p = 0; p < single.branches.y.size(); ++p)
              d = std::max(d, std::abs(single.branches.y[p] - sup.outcome.branches.y[p]));
            worst = std::max(worst, d);
          }
  v.pass = worst <= 1e-10;
  v.detail = fmt("%g cells compared, %g guarded, max deviation %.1e", compared, guarded, worst);
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "maximal-entanglement points", maximal_points},
      {2, "closed form vs direct evolution", closed_form_equivalence},
      {3, "probability completeness", completeness},
      {4, "parity law", parity_law},
      {5, "PPT negativity vs closed form", ppt_agreement},
      {6, "entanglement on the whole grid", deterministic},
      {7, "forbidden outcome of truncated inputs", forbidden_outcome},
      {8, "nonclassicality properties", nonclassicality},
      {9, "displacement invariants and overlaps", displacement_invariants},
      {10, "superposition reduction", superposition_reduction},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d (%s): %s [%.1fs]\n", v.pass ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str(), secs);
    std::fflush(stdout);
    if (!v.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
