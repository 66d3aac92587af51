#include "cathybrid/io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "cathybrid/errors.hpp"

namespace cathybrid::io {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void write_csv(std::ostream& out, const CsvTable& table) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
}

std::string to_csv_string(const CsvTable& table) {
  std::ostringstream os;
  write_csv(os, table);
  return os.str();
}

CsvTable parse_csv(const std::string& text) {
  CsvTable table;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    if (first) {
      table.header = std::move(cells);
      first = false;
    } else {
      if (cells.size() != table.header.size()) throw ConfigError("CSV row width differs from header");
      table.rows.push_back(std::move(cells));
    }
  }
  return table;
}

CsvTable sweep_table(const SweepGrid& grid) {
  CsvTable t{{"beta", "t", "n", "probability", "negativity", "B_abs", "separable"}, {}};
  t.rows.reserve(grid.cells.size());
  for (const auto& c : grid.cells) {
    t.rows.push_back({format_double(c.beta), format_double(c.t), std::to_string(c.n), format_double(c.probability),
                      format_double(c.negativity), format_double(c.b_abs), c.separable ? "true" : "false"});
  }
  return t;
}

CsvTable search_table(const std::vector<MaxPoint>& points) {
  CsvTable t{{"beta", "t", "n", "probability", "negativity"}, {}};
  for (const auto& p : points) {
    t.rows.push_back({format_double(p.beta), format_double(p.t), std::to_string(p.n), format_double(p.probability),
                      format_double(p.negativity)});
  }
  return t;
}

CsvTable wigner_table(const WignerGrid& grid) {
  CsvTable t{{"x1", "x2", "W"}, {}};
  t.rows.reserve(grid.values.size());
  for (std::size_t i = 0; i < grid.x1.size(); ++i) {
    for (std::size_t j = 0; j < grid.x2.size(); ++j) {
      t.rows.push_back({format_double(grid.x1[i]), format_double(grid.x2[j]), format_double(grid.at(i, j))});
    }
  }
  return t;
}

CsvTable quadrature_table(const QuadratureDistribution& dist) {
  CsvTable t{{"x", "P"}, {}};
  for (std::size_t i = 0; i < dist.x.size(); ++i) t.rows.push_back({format_double(dist.x[i]), format_double(dist.density[i])});
  return t;
}

Sign parse_sign(const std::string& s) {
  if (s == "+" || s == "plus" || s == "even") return Sign::Plus;
  if (s == "-" || s == "minus" || s == "odd") return Sign::Minus;
  throw ConfigError("sign: expected '+' or '-', got '" + s + "'");
}

StateKind parse_kind(const std::string& s) {
  if (s == "sdlps") return StateKind::Sdlps;
  if (s == "superposition") return StateKind::Superposition;
  if (s == "truncated") return StateKind::Truncated;
  throw ConfigError("kind: expected sdlps, superposition or truncated, got '" + s + "'");
}

namespace {

std::vector<Complex> complex_list(const Json& j, const char* field) {
  if (!j.is_array()) throw ConfigError(std::string(field) + ": expected an array");
  std::vector<Complex> out;
  for (const auto& e : j) {
    if (e.is_number()) {
      out.emplace_back(e.get<double>(), 0.0);
    } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
      out.emplace_back(e[0].get<double>(), e[1].get<double>());
    } else {
      throw ConfigError(std::string(field) + ": entries must be numbers or [re, im] pairs");
    }
  }
  return out;
}

Json complex_list_json(const std::vector<Complex>& xs) {
  Json arr = Json::array();
  for (const auto& x : xs) {
    if (x.imag() == 0.0) {
      arr.push_back(x.real());
    } else {
      arr.push_back(Json::array({x.real(), x.imag()}));
    }
  }
  return arr;
}

template <typename T>
T field(const Json& j, const char* name) {
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string(name) + ": " + e.what());
  }
}

Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Range range_from_json(const Json& j, Range base, const char* name) {
  if (!j.is_object()) throw ConfigError(std::string(name) + ": expected {min, max, steps}");
  if (j.contains("min")) base.min = field<double>(j, "min");
  if (j.contains("max")) base.max = field<double>(j, "max");
  if (j.contains("steps")) base.steps = field<int>(j, "steps");
  return base;
}

}  // namespace

StateSpec state_spec_from_json(const Json& j) {
  if (!j.is_object()) throw ConfigError("state spec: expected a JSON object");
  StateSpec s;
  s.kind = parse_kind(j.contains("kind") ? field<std::string>(j, "kind") : "sdlps");
  s.sign = parse_sign(j.contains("sign") ? field<std::string>(j, "sign") : "+");
  if (j.contains("beta")) s.beta = field<double>(j, "beta");
  if (j.contains("l")) s.l = field<int>(j, "l");
  if (j.contains("b")) s.b = complex_list(j.at("b"), "b");
  if (j.contains("d")) s.d = complex_list(j.at("d"), "d");
  return s;
}

Json to_json(const StateSpec& spec) {
  Json j{{"kind", to_string(spec.kind)}, {"sign", to_string(spec.sign)}};
  switch (spec.kind) {
    case StateKind::Sdlps:
      j["beta"] = spec.beta;
      j["l"] = spec.l;
      break;
    case StateKind::Superposition:
      j["beta"] = spec.beta;
      j["b"] = complex_list_json(spec.b);
      break;
    case StateKind::Truncated:
      j["d"] = complex_list_json(spec.d);
      break;
  }
  return j;
}

Json state_to_json(const NormalizedState& state) {
  Json amps = Json::array();
  for (const auto& a : state.vector.amplitudes()) amps.push_back(Json::array({a.real(), a.imag()}));
  return Json{{"spec", to_json(state.spec)},
              {"cutoff", state.vector.cutoff()},
              {"norm_factor", state.norm_factor},
              {"amplitudes", amps}};
}

Json result_to_json(const ConditionalResult& r) {
  return Json{{"n", r.n},
              {"probability", r.probability},
              {"negativity", r.negativity},
              {"B_abs", finite_or_null(r.b_abs())},
              {"psi_parity", to_string(r.psi_parity)},
              {"phi_parity", to_string(r.phi_parity)},
              {"separable", r.separable}};
}

RunConfig run_config_from_json(const Json& j, RunConfig base) {
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  if (j.contains("input")) base.input = state_spec_from_json(j.at("input"));
  if (j.contains("a0") || j.contains("a1")) {
    const double a0 = j.contains("a0") ? field<double>(j, "a0") : std::abs(base.photon.a0());
    const double a1 = j.contains("a1") ? field<double>(j, "a1") : std::abs(base.photon.a1());
    base.photon = DelocalizedPhoton::normalized(a0, a1);
  }
  if (j.contains("outcomes")) base.outcomes = field<std::vector<int>>(j, "outcomes");
  if (j.contains("beta")) base.beta = range_from_json(j.at("beta"), base.beta, "beta");
  if (j.contains("t")) base.t = range_from_json(j.at("t"), base.t, "t");
  if (j.contains("cutoff")) base.cutoff = field<int>(j, "cutoff");
  if (j.contains("tail_tol")) base.tail_tol = field<double>(j, "tail_tol");
  if (j.contains("format")) {
    const auto f = field<std::string>(j, "format");
    if (f == "csv") {
      base.format = OutputFormat::Csv;
    } else if (f == "json") {
      base.format = OutputFormat::Json;
    } else {
      throw ConfigError("format: expected csv or json");
    }
  }
  if (j.contains("workers")) base.workers = field<int>(j, "workers");
  return base;
}

}  // namespace cathybrid::io
