#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cathybrid/cli.hpp"
#include "cathybrid/errors.hpp"
#include "cathybrid/io.hpp"

using namespace cathybrid;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "cathybrid");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("state subcommand") {
  const auto r = run({"state", "--kind", "sdlps", "--sign", "-", "--l", "0", "--beta", "2"});
  REQUIRE(r.code == 0);
  const auto j = io::Json::parse(r.out);
  const auto& amps = j.at("amplitudes");
  CHECK(amps.size() == kDefaultCutoff + 1);
  for (std::size_t n = 0; n < amps.size(); n += 2) CHECK(amps[n][0].get<double>() == 0.0);
  CHECK(amps[1][0].get<double>() != 0.0);
}

TEST_CASE("entangle subcommand") {
  const auto r = run({"entangle", "--kind", "sdlps", "--sign", "+", "--l", "0", "--beta", "0.5", "--t", "0.25", "--n",
                      "0", "--a0", "0.7071", "--a1", "0.7071"});
  REQUIRE(r.code == 0);
  const auto j = io::Json::parse(r.out);
  CHECK(j.at("negativity").get<double>() > 0.99);
  CHECK(j.at("probability").get<double>() == doctest::Approx(0.939).epsilon(0.02));
  CHECK(j.at("psi_parity") == "even");
}

TEST_CASE("exit codes") {
  CHECK(run({"state", "--bogus"}).code == kExitConfig);
  CHECK(run({}).code == kExitConfig);
  CHECK(run({"state", "--sign", "sideways"}).code == kExitConfig);
  CHECK(run({"entangle", "--t", "1.5", "--n", "0"}).code == kExitConfig);
  CHECK(run({"entangle", "--t", "0.5", "--n", "99"}).code == kExitConfig);
  const auto degenerate = run({"state", "--sign", "-", "--l", "0", "--beta", "0"});
  CHECK(degenerate.code == kExitNumerical);
  CHECK(!degenerate.err.empty());
  CHECK(run({"state", "--beta", "5", "--cutoff", "20"}).code == kExitNumerical);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("cutoff from the environment") {
  ::setenv("CATHYBRID_CUTOFF", "24", 1);
  const auto r = run({"state", "--beta", "0.5"});
  ::unsetenv("CATHYBRID_CUTOFF");
  REQUIRE(r.code == 0);
  CHECK(io::Json::parse(r.out).at("cutoff") == 24);
  ::setenv("CATHYBRID_CUTOFF", "many", 1);
  CHECK(run({"state", "--beta", "0.5"}).code == kExitConfig);
  ::unsetenv("CATHYBRID_CUTOFF");
}

TEST_CASE("config file and flag overrides") {
  const auto path = temp_file("cathybrid_cfg.json", R"({
  "input": {"kind": "sdlps", "sign": "-", "l": 1, "beta": 1.2},
  "outcomes": [0, 1],
  "beta": {"min": 0.5, "max": 1.0, "steps": 2},
  "t": {"min": 0.3, "max": 0.6, "steps": 2}
})");
  const auto r = run({"sweep", "--config", path});
  REQUIRE(r.code == 0);
  const auto t = io::parse_csv(r.out);
  CHECK(t.header == std::vector<std::string>{"beta", "t", "n", "probability", "negativity", "B_abs", "separable"});
  CHECK(t.rows.size() == 8);
  CHECK(t.rows[0][0] == "0.5");
  CHECK(t.rows[1][2] == "1");

  const auto o = run({"sweep", "--config", path, "--beta-steps", "1", "--n", "2"});
  REQUIRE(o.code == 0);
  CHECK(io::parse_csv(o.out).rows.size() == 2);

  const auto bad = temp_file("cathybrid_bad.json", "{\n  \"cutoff\": 32,\n  \"beta\": {\"min\": 1,, }\n}");
  const auto e = run({"sweep", "--config", bad});
  CHECK(e.code == kExitConfig);
  CHECK(e.err.find("line 3") != std::string::npos);

  const auto field = temp_file("cathybrid_field.json", R"({"t": {"min": 0.3, "max": 1.2, "steps": 3}})");
  const auto f = run({"sweep", "--config", field});
  CHECK(f.code == kExitConfig);
  CHECK(f.err.find("t") != std::string::npos);
  CHECK(run({"sweep", "--config", "/nonexistent/cfg.json"}).code == kExitConfig);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"sweep", "--l", "1", "--beta-steps", "4", "--t-steps", "4", "--n", "0,1"};
  const auto a = run(args);
  const auto b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto w1 = args;
  w1.insert(w1.end(), {"--workers", "1"});
  CHECK(run(w1).out == a.out);
}

TEST_CASE("csv round trip") {
  const auto r = run({"sweep", "--beta-steps", "3", "--t-steps", "3", "--n", "0,1"});
  REQUIRE(r.code == 0);
  CHECK(io::to_csv_string(io::parse_csv(r.out)) == r.out);
  const auto s = run({"search", "--beta-min", "1.5", "--beta-max", "3", "--beta-steps", "5", "--t-min", "0.7",
                      "--t-max", "0.95", "--t-steps", "5"});
  REQUIRE(s.code == 0);
  CHECK(io::to_csv_string(io::parse_csv(s.out)) == s.out);
}

TEST_CASE("json round trip") {
  const auto r = run({"sweep", "--beta-steps", "2", "--t-steps", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(io::Json::parse(r.out).dump(2) + "\n" == r.out);

  const auto spec = StateSpec::superposition({Complex(0.5, -0.25), 1.0}, Sign::Minus, 1.7);
  const auto back = io::state_spec_from_json(io::to_json(spec));
  CHECK(back.kind == spec.kind);
  CHECK(back.sign == spec.sign);
  CHECK(back.beta == spec.beta);
  CHECK(back.b == spec.b);
  CHECK(io::to_json(back) == io::to_json(spec));
}

TEST_CASE("number formatting") {
  CHECK(io::format_double(0.1) == "0.1");
  CHECK(io::format_double(1.0 / 3.0) == "0.333333333333");
  CHECK(io::format_double(INFINITY) == "inf");
  CHECK(io::format_double(NAN) == "nan");
}

TEST_CASE("other subcommands") {
  const auto m = run({"moments", "--sign", "-", "--l", "0", "--beta-min", "0.1", "--beta-max", "0.1", "--beta-steps", "1"});
  REQUIRE(m.code == 0);
  const auto t = io::parse_csv(m.out);
  CHECK(t.header == std::vector<std::string>{"beta", "sigma_x1", "sigma_x2", "fano"});
  CHECK(std::stod(t.rows.at(0).at(3)) < 1);

  const auto q = run({"quadrature", "--beta", "2", "--axis", "X2", "--points", "51"});
  REQUIRE(q.code == 0);
  CHECK(io::parse_csv(q.out).rows.size() == 51);

  const auto w = run({"wigner", "--beta", "1", "--points", "11", "--extent", "3"});
  REQUIRE(w.code == 0);
  const auto wt = io::parse_csv(w.out);
  CHECK(wt.rows.size() == 121);
  CHECK(wt.rows.front()[0] == "-3");

  const auto path = (std::filesystem::temp_directory_path() / "cathybrid_state.json").string();
  REQUIRE(run({"state", "--beta", "1", "--out", path}).code == 0);
  std::ifstream in(path);
  CHECK(io::Json::parse(in).at("spec").at("kind") == "sdlps");
}
