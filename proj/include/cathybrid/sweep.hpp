#pragma once

#include <string>
#include <vector>

#include "cathybrid/hybrid.hpp"
#include "cathybrid/state_family.hpp"

namespace cathybrid {

struct Range {
  double min = 0.0;
  double max = 0.0;
  int steps = 1;

  // `steps` evenly spaced samples including both ends (one sample = min).
  std::vector<double> samples() const;
};

enum class OutputFormat { Csv, Json };

struct RunConfig {
  StateSpec input = StateSpec::sdlps(0, Sign::Plus, 1.0);
  DelocalizedPhoton photon = DelocalizedPhoton::balanced();
  std::vector<int> outcomes{0};
  Range beta{0.3, 3.0, 20};
  Range t{0.1, 0.9, 20};
  int cutoff = kDefaultCutoff;
  double tail_tol = kDefaultTailTolerance;
  OutputFormat format = OutputFormat::Csv;
  // 0 picks the hardware concurrency.
  int workers = 0;

  // Throws ConfigError naming the offending field.
  void validate() const;
};

struct CellRecord {
  double beta = 0.0;
  double t = 0.0;
  int n = 0;
  double probability = 0.0;
  double negativity = 0.0;
  double b_abs = 0.0;
  bool separable = false;
};

// Records in row-major (beta, t) order, outcomes innermost.
struct SweepGrid {
  std::vector<double> betas;
  std::vector<double> ts;
  std::vector<int> outcomes;
  std::vector<CellRecord> cells;

  const CellRecord& at(std::size_t i_beta, std::size_t i_t, std::size_t i_n) const;
};

// The input spec with its displacement replaced by `beta` (truncated specs are unchanged).
StateSpec with_beta(const StateSpec& spec, double beta);

// One heralded outcome evaluated at (beta, t).
CellRecord evaluate_cell(const RunConfig& config, double beta, double t, int n);

SweepGrid sweep(const RunConfig& config);

struct MaxPoint {
  double beta = 0.0;
  double t = 0.0;
  int n = 0;
  double probability = 0.0;
  double negativity = 0.0;
};

inline constexpr double kSearchTolerance = 1e-6;
inline constexpr double kNearMaxNegativity = 0.999;

// Grid scan, then bisection on |a0| - |a1||B| along each grid line where it
// changes sign. Returns the grid cells and refined points with negativity
// >= 0.999, by descending probability.
std::vector<MaxPoint> search_max(const RunConfig& config);

}  // namespace cathybrid
