#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "cathybrid/hybrid.hpp"
#include "cathybrid/nonclassicality.hpp"
#include "cathybrid/state_family.hpp"
#include "cathybrid/sweep.hpp"

namespace cathybrid::io {

using Json = nlohmann::json;

// 12 significant digits; "inf", "-inf", "nan" for non-finite values.
std::string format_double(double x);

// A parsed or to-be-written CSV file: header plus string cells.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(std::ostream& out, const CsvTable& table);
std::string to_csv_string(const CsvTable& table);
// Plain comma-separated values without quoting, as written by write_csv.
CsvTable parse_csv(const std::string& text);

CsvTable sweep_table(const SweepGrid& grid);
CsvTable search_table(const std::vector<MaxPoint>& points);
CsvTable wigner_table(const WignerGrid& grid);
CsvTable quadrature_table(const QuadratureDistribution& dist);

// {"kind": "sdlps|superposition|truncated", "sign": "+|-", "beta": .., "l": .., "b": [..], "d": [..]}.
// Complex list entries are numbers or [re, im] pairs. Throws ConfigError.
StateSpec state_spec_from_json(const Json& j);
Json to_json(const StateSpec& spec);

Sign parse_sign(const std::string& s);
StateKind parse_kind(const std::string& s);

Json state_to_json(const NormalizedState& state);
// {"n", "probability", "negativity", "B_abs", "psi_parity", "phi_parity", "separable"}.
Json result_to_json(const ConditionalResult& result);

// Fields missing from `j` keep the values already in `base`.
RunConfig run_config_from_json(const Json& j, RunConfig base = {});

}  // namespace cathybrid::io
