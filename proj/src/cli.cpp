#include "cathybrid/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cathybrid/errors.hpp"
#include "cathybrid/io.hpp"
#include "cathybrid/nonclassicality.hpp"
#include "cathybrid/state_family.hpp"
#include "cathybrid/sweep.hpp"

namespace cathybrid {

namespace {

using io::Json;

int default_cutoff() {
  if (const char* env = std::getenv("CATHYBRID_CUTOFF"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const int c = std::stoi(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
      return c;
    } catch (const std::exception&) {
      throw ConfigError(std::string("CATHYBRID_CUTOFF: not an integer: '") + env + "'");
    }
  }
  return kDefaultCutoff;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config '" + path + "': " + e.what());
  }
}

// Flags shared by every subcommand. Values only override the config file when given.
struct CommonFlags {
  std::string config_path;
  std::string kind;
  std::string sign;
  int l = 0;
  double beta = 0.0;
  std::vector<double> b;
  std::vector<double> d;
  int cutoff = 0;
  double tail_tol = 0.0;
  double a0 = 0.0;
  double a1 = 0.0;
  std::string out_path;
  std::string format;
  int workers = 0;

  CLI::Option* o_kind = nullptr;
  CLI::Option* o_sign = nullptr;
  CLI::Option* o_l = nullptr;
  CLI::Option* o_beta = nullptr;
  CLI::Option* o_b = nullptr;
  CLI::Option* o_d = nullptr;
  CLI::Option* o_cutoff = nullptr;
  CLI::Option* o_tail = nullptr;
  CLI::Option* o_a0 = nullptr;
  CLI::Option* o_a1 = nullptr;
  CLI::Option* o_format = nullptr;
  CLI::Option* o_workers = nullptr;

  void attach(CLI::App* app) {
    app->add_option("--config", config_path, "JSON run configuration; flags override its values");
    o_kind = app->add_option("--kind", kind, "sdlps | superposition | truncated");
    o_sign = app->add_option("--sign", sign, "+ (even) or - (odd)");
    o_l = app->add_option("--l", l, "photon number of the displaced states");
    o_beta = app->add_option("--beta", beta, "displacement amplitude beta > 0");
    o_b = app->add_option("--b", b, "superposition coefficients b_0,b_1,...")->delimiter(',');
    o_d = app->add_option("--d", d, "truncated-state coefficients")->delimiter(',');
    o_cutoff = app->add_option("--cutoff", cutoff, "Fock cutoff (default 64 or $CATHYBRID_CUTOFF)");
    o_tail = app->add_option("--tail-tol", tail_tol, "allowed mass in the top 8 Fock levels");
    o_a0 = app->add_option("--a0", a0, "delocalized-photon amplitude a0");
    o_a1 = app->add_option("--a1", a1, "delocalized-photon amplitude a1");
    app->add_option("--out", out_path, "write output to a file instead of stdout");
    o_format = app->add_option("--format", format, "csv | json");
    o_workers = app->add_option("--workers", workers, "worker threads (0 = all cores)");
  }

  RunConfig resolve() const {
    RunConfig cfg;
    cfg.cutoff = default_cutoff();
    if (!config_path.empty()) cfg = io::run_config_from_json(load_json_file(config_path), cfg);
    if (o_kind->count()) cfg.input.kind = io::parse_kind(kind);
    if (o_sign->count()) cfg.input.sign = io::parse_sign(sign);
    if (o_l->count()) cfg.input.l = l;
    if (o_beta->count()) cfg.input.beta = beta;
    if (o_b->count()) cfg.input.b.assign(b.begin(), b.end());
    if (o_d->count()) cfg.input.d.assign(d.begin(), d.end());
    if (o_cutoff->count()) cfg.cutoff = cutoff;
    if (o_tail->count()) cfg.tail_tol = tail_tol;
    if (o_a0->count() || o_a1->count()) {
      const double x0 = o_a0->count() ? a0 : std::abs(cfg.photon.a0());
      const double x1 = o_a1->count() ? a1 : std::abs(cfg.photon.a1());
      cfg.photon = DelocalizedPhoton::normalized(x0, x1);
    }
    if (o_format->count()) cfg = io::run_config_from_json(Json{{"format", format}}, cfg);
    if (o_workers->count()) cfg.workers = workers;
    if (cfg.cutoff < 8 || cfg.cutoff > 128) throw ConfigError("cutoff: must lie in [8, 128]");
    cfg.input.validate();
    return cfg;
  }
};

struct RangeFlags {
  Range range;
  CLI::Option* o_min = nullptr;
  CLI::Option* o_max = nullptr;
  CLI::Option* o_steps = nullptr;

  void attach(CLI::App* app, const std::string& name) {
    o_min = app->add_option("--" + name + "-min", range.min);
    o_max = app->add_option("--" + name + "-max", range.max);
    o_steps = app->add_option("--" + name + "-steps", range.steps);
  }
  Range apply(Range base) const {
    if (o_min->count()) base.min = range.min;
    if (o_max->count()) base.max = range.max;
    if (o_steps->count()) base.steps = range.steps;
    return base;
  }
};

void emit(const CommonFlags& flags, std::ostream& out, const std::string& text) {
  if (flags.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(flags.out_path);
  if (!file) throw ConfigError("--out: cannot write '" + flags.out_path + "'");
  file << text;
}

Json sweep_json(const SweepGrid& grid) {
  Json cells = Json::array();
  for (const auto& c : grid.cells) {
    cells.push_back(Json{{"beta", c.beta},
                         {"t", c.t},
                         {"n", c.n},
                         {"probability", c.probability},
                         {"negativity", c.negativity},
                         {"B_abs", std::isfinite(c.b_abs) ? Json(c.b_abs) : Json(nullptr)},
                         {"separable", c.separable}});
  }
  return cells;
}

Json search_json(const std::vector<MaxPoint>& points) {
  Json rows = Json::array();
  for (const auto& p : points) {
    rows.push_back(Json{{"beta", p.beta}, {"t", p.t}, {"n", p.n}, {"probability", p.probability},
                        {"negativity", p.negativity}});
  }
  return rows;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Even/odd displaced-number-state superpositions and heralded hybrid entanglement"};
  app.require_subcommand(1);

  CommonFlags state_f, wigner_f, quad_f, moments_f, entangle_f, sweep_f, search_f;
  auto* state_cmd = app.add_subcommand("state", "print the Fock amplitudes of a state");
  state_f.attach(state_cmd);

  auto* wigner_cmd = app.add_subcommand("wigner", "Wigner function on a grid (CSV x1,x2,W)");
  wigner_f.attach(wigner_cmd);
  double x_half = 0.0;
  int points = 301;
  auto* o_half = wigner_cmd->add_option("--extent", x_half, "grid covers +-extent (default 2 beta + 6)");
  wigner_cmd->add_option("--points", points, "samples per axis");

  auto* quad_cmd = app.add_subcommand("quadrature", "quadrature distribution (CSV x,P)");
  quad_f.attach(quad_cmd);
  std::string axis = "X1";
  double q_half = 0.0;
  int q_points = 301;
  quad_cmd->add_option("--axis", axis, "X1 or X2")->check(CLI::IsMember({"X1", "X2"}));
  auto* o_qhalf = quad_cmd->add_option("--extent", q_half, "grid covers +-extent (default 2 beta + 6)");
  quad_cmd->add_option("--points", q_points, "samples");

  auto* moments_cmd = app.add_subcommand("moments", "sigma_x1, sigma_x2 and Fano factor versus beta");
  moments_f.attach(moments_cmd);
  RangeFlags moments_beta;
  moments_beta.range = Range{0.1, 3.0, 30};
  moments_beta.attach(moments_cmd, "beta");

  auto* entangle_cmd = app.add_subcommand("entangle", "one heralded outcome as JSON");
  entangle_f.attach(entangle_cmd);
  double ent_t = 0.0;
  int ent_n = 0;
  auto* o_t = entangle_cmd->add_option("--t", ent_t, "beam-splitter transmittance");
  auto* o_n = entangle_cmd->add_option("--n", ent_n, "photons registered in the auxiliary mode");

  auto* sweep_cmd = app.add_subcommand("sweep", "grid over (beta, t)");
  sweep_f.attach(sweep_cmd);
  RangeFlags sweep_beta, sweep_t;
  sweep_beta.attach(sweep_cmd, "beta");
  sweep_t.attach(sweep_cmd, "t");
  std::vector<int> sweep_n;
  auto* o_sweep_n = sweep_cmd->add_option("--n", sweep_n, "outcomes")->delimiter(',');

  auto* search_cmd = app.add_subcommand("search", "points of maximal negativity");
  search_f.attach(search_cmd);
  RangeFlags search_beta, search_t;
  search_beta.attach(search_cmd, "beta");
  search_t.attach(search_cmd, "t");
  std::vector<int> search_n;
  auto* o_search_n = search_cmd->add_option("--n", search_n, "outcomes")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (*state_cmd) {
      const RunConfig cfg = state_f.resolve();
      emit(state_f, out, io::state_to_json(build(cfg.input, cfg.cutoff, cfg.tail_tol)).dump(2) + "\n");
    } else if (*wigner_cmd) {
      const RunConfig cfg = wigner_f.resolve();
      const NormalizedState s = build(cfg.input, cfg.cutoff, cfg.tail_tol);
      AxisSpec ax = AxisSpec::for_beta(cfg.input.beta, points);
      if (o_half->count()) ax = AxisSpec{-x_half, x_half, points};
      emit(wigner_f, out, io::to_csv_string(io::wigner_table(wigner(s.vector, ax, ax, cfg.tail_tol))));
    } else if (*quad_cmd) {
      const RunConfig cfg = quad_f.resolve();
      const NormalizedState s = build(cfg.input, cfg.cutoff, cfg.tail_tol);
      AxisSpec ax = AxisSpec::for_beta(cfg.input.beta, q_points);
      if (o_qhalf->count()) ax = AxisSpec{-q_half, q_half, q_points};
      const Quadrature q = axis == "X1" ? Quadrature::X1 : Quadrature::X2;
      emit(quad_f, out, io::to_csv_string(io::quadrature_table(quadrature_distribution(s.vector, q, ax, cfg.tail_tol))));
    } else if (*moments_cmd) {
      const RunConfig cfg = moments_f.resolve();
      const Range betas = moments_beta.apply(moments_beta.range);
      if (betas.steps < 1 || betas.max < betas.min) throw ConfigError("beta range: empty");
      io::CsvTable table{{"beta", "sigma_x1", "sigma_x2", "fano"}, {}};
      for (const double b : betas.samples()) {
        const NormalizedState s = build(with_beta(cfg.input, b), cfg.cutoff, cfg.tail_tol);
        table.rows.push_back({io::format_double(b), io::format_double(quadrature_sigma(s.vector, Quadrature::X1)),
                              io::format_double(quadrature_sigma(s.vector, Quadrature::X2)),
                              io::format_double(fano(s.vector))});
      }
      emit(moments_f, out, io::to_csv_string(table));
    } else if (*entangle_cmd) {
      const RunConfig cfg = entangle_f.resolve();
      const double t = o_t->count() ? ent_t : cfg.t.min;
      const int n = o_n->count() ? ent_n : cfg.outcomes.front();
      if (n < 0 || n > cfg.cutoff + 1) throw OutcomeError("--n: outcome outside 0..cutoff+1");
      const NormalizedState s = build(cfg.input, cfg.cutoff, cfg.tail_tol);
      const ConditionalResult res = evolve_and_condition(s, cfg.photon, BeamSplitterParams(t), n);
      emit(entangle_f, out, io::result_to_json(res).dump(2) + "\n");
    } else if (*sweep_cmd) {
      RunConfig cfg = sweep_f.resolve();
      cfg.beta = sweep_beta.apply(cfg.beta);
      cfg.t = sweep_t.apply(cfg.t);
      if (o_sweep_n->count()) cfg.outcomes = sweep_n;
      const SweepGrid grid = sweep(cfg);
      emit(sweep_f, out,
           cfg.format == OutputFormat::Json ? sweep_json(grid).dump(2) + "\n" : io::to_csv_string(io::sweep_table(grid)));
    } else if (*search_cmd) {
      RunConfig cfg = search_f.resolve();
      cfg.beta = search_beta.apply(cfg.beta);
      cfg.t = search_t.apply(cfg.t);
      if (o_search_n->count()) cfg.outcomes = search_n;
      const auto points = search_max(cfg);
      if (points.empty()) err << "search: no point reaches negativity " << kNearMaxNegativity << "\n";
      emit(search_f, out,
           cfg.format == OutputFormat::Json ? search_json(points).dump(2) + "\n"
                                            : io::to_csv_string(io::search_table(points)));
    }
  } catch (const InputError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const NumericalDomainError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace cathybrid
