#include "cathybrid/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "cathybrid/beam_splitter.hpp"
#include "cathybrid/errors.hpp"

namespace cathybrid {

namespace {

unsigned worker_count(int requested, std::size_t jobs) {
  unsigned w = requested > 0 ? static_cast<unsigned>(requested) : std::thread::hardware_concurrency();
  w = std::max(1u, w);
  return static_cast<unsigned>(std::min<std::size_t>(w, std::max<std::size_t>(jobs, 1)));
}

// Runs job(i) for i in [0, count) on a bounded pool; rethrows the first failure.
template <typename Job>
void parallel_for(std::size_t count, int requested_workers, Job job) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  const unsigned workers = worker_count(requested_workers, count);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          job(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::vector<double> Range::samples() const {
  std::vector<double> xs;
  if (steps == 1) return {min};
  xs.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) xs.push_back(min + (max - min) * i / (steps - 1));
  return xs;
}

void RunConfig::validate() const {
  input.validate();
  if (outcomes.empty()) throw ConfigError("outcomes: list is empty");
  for (const int n : outcomes) {
    if (n < 0) throw ConfigError("outcomes: photon numbers must be nonnegative");
    if (n > cutoff + 1) throw OutcomeError("outcomes: " + std::to_string(n) + " exceeds cutoff + 1");
  }
  if (beta.steps < 1 || !(beta.max >= beta.min) || beta.min < 0.0) throw ConfigError("beta range: empty or negative");
  if (t.steps < 1 || !(t.max >= t.min)) throw ConfigError("t range: empty");
  if (!(t.min > 0.0 && t.max < 1.0)) throw ConfigError("t range: must lie inside (0, 1)");
  if (cutoff < 8 || cutoff > 128) throw ConfigError("cutoff: must lie in [8, 128]");
  if (!(tail_tol > 0.0)) throw ConfigError("tail_tol: must be positive");
}

const CellRecord& SweepGrid::at(std::size_t i_beta, std::size_t i_t, std::size_t i_n) const {
  return cells[(i_beta * ts.size() + i_t) * outcomes.size() + i_n];
}

StateSpec with_beta(const StateSpec& spec, double beta) {
  StateSpec s = spec;
  if (s.kind != StateKind::Truncated) s.beta = beta;
  return s;
}

namespace {

CellRecord to_record(double beta, double t, const ConditionalResult& res) {
  CellRecord rec;
  rec.beta = beta;
  rec.t = t;
  rec.n = res.n;
  rec.probability = res.probability;
  rec.negativity = res.negativity;
  rec.b_abs = res.b_abs();
  rec.separable = res.separable;
  return rec;
}

}  // namespace

CellRecord evaluate_cell(const RunConfig& config, double beta, double t, int n) {
  const NormalizedState input = build(with_beta(config.input, beta), config.cutoff, config.tail_tol);
  return to_record(beta, t, evolve_and_condition(input, config.photon, BeamSplitterParams(t), n));
}

SweepGrid sweep(const RunConfig& config) {
  config.validate();
  SweepGrid grid{config.beta.samples(), config.t.samples(), config.outcomes, {}};
  const std::size_t n_out = grid.outcomes.size();
  const std::size_t n_t = grid.ts.size();
  grid.cells.resize(grid.betas.size() * n_t * n_out);

  parallel_for(grid.betas.size() * n_t, config.workers, [&](std::size_t cell) {
    const double beta = grid.betas[cell / n_t];
    const double t = grid.ts[cell % n_t];
    const NormalizedState input = build(with_beta(config.input, beta), config.cutoff, config.tail_tol);
    const HybridEvolution evo(input, BeamSplitterParams(t));
    for (std::size_t k = 0; k < n_out; ++k) {
      grid.cells[cell * n_out + k] = to_record(beta, t, evo.condition(grid.outcomes[k], config.photon));
    }
  });
  return grid;
}

namespace {

struct Probe {
  bool ok = false;
  double residual = 0.0;
  CellRecord rec;
};

Probe probe(const RunConfig& config, double beta, double t, int n) {
  Probe p;
  p.rec = evaluate_cell(config, beta, t, n);
  if (p.rec.separable || !(p.rec.probability > 0.0) || !std::isfinite(p.rec.b_abs)) return p;
  p.ok = true;
  p.residual = std::abs(config.photon.a0()) - std::abs(config.photon.a1()) * p.rec.b_abs;
  return p;
}

// Bisection between two probes with opposite residual signs, varying beta or t.
Probe bisect(const RunConfig& config, int n, Probe lo, Probe hi, bool along_t) {
  auto coord = [&](const Probe& p) { return along_t ? p.rec.t : p.rec.beta; };
  while (std::abs(coord(hi) - coord(lo)) > kSearchTolerance) {
    const double mid = 0.5 * (coord(lo) + coord(hi));
    const Probe m = along_t ? probe(config, lo.rec.beta, mid, n) : probe(config, mid, lo.rec.t, n);
    if (!m.ok) return m;
    if (m.residual == 0.0) return m;
    if ((m.residual > 0.0) == (lo.residual > 0.0)) {
      lo = m;
    } else {
      hi = m;
    }
  }
  return std::abs(lo.residual) <= std::abs(hi.residual) ? lo : hi;
}

}  // namespace

std::vector<MaxPoint> search_max(const RunConfig& config) {
  const SweepGrid grid = sweep(config);
  const std::size_t n_t = grid.ts.size();
  const std::size_t n_b = grid.betas.size();

  struct Bracket {
    std::size_t i_b0, i_t0, i_b1, i_t1, i_n;
    bool along_t;
  };
  const double a0 = std::abs(config.photon.a0());
  const double a1 = std::abs(config.photon.a1());
  auto residual = [&](const CellRecord& c, double& out) {
    if (c.separable || !(c.probability > 0.0) || !std::isfinite(c.b_abs)) return false;
    out = a0 - a1 * c.b_abs;
    return true;
  };

  std::vector<Bracket> brackets;
  std::vector<MaxPoint> exact;  // grid cells already near the maximum
  for (std::size_t k = 0; k < grid.outcomes.size(); ++k) {
    for (std::size_t ib = 0; ib < n_b; ++ib) {
      for (std::size_t it = 0; it < n_t; ++it) {
        double h = 0.0;
        const CellRecord& c = grid.at(ib, it, k);
        if (!residual(c, h)) continue;
        if (c.negativity >= kNearMaxNegativity) exact.push_back({c.beta, c.t, c.n, c.probability, c.negativity});
        double h2 = 0.0;
        if (it + 1 < n_t && residual(grid.at(ib, it + 1, k), h2) && h * h2 < 0.0) {
          brackets.push_back({ib, it, ib, it + 1, k, true});
        }
        if (ib + 1 < n_b && residual(grid.at(ib + 1, it, k), h2) && h * h2 < 0.0) {
          brackets.push_back({ib, it, ib + 1, it, k, false});
        }
      }
    }
  }

  std::vector<Probe> refined(brackets.size());
  parallel_for(brackets.size(), config.workers, [&](std::size_t i) {
    const Bracket& b = brackets[i];
    const int n = grid.outcomes[b.i_n];
    const Probe lo = probe(config, grid.betas[b.i_b0], grid.ts[b.i_t0], n);
    const Probe hi = probe(config, grid.betas[b.i_b1], grid.ts[b.i_t1], n);
    refined[i] = bisect(config, n, lo, hi, b.along_t);
  });

  std::vector<MaxPoint> points = exact;
  for (const Probe& p : refined) {
    if (!p.ok || p.rec.negativity < kNearMaxNegativity) continue;
    points.push_back({p.rec.beta, p.rec.t, p.rec.n, p.rec.probability, p.rec.negativity});
  }
  std::sort(points.begin(), points.end(), [](const MaxPoint& a, const MaxPoint& b) {
    if (a.probability != b.probability) return a.probability > b.probability;
    if (a.n != b.n) return a.n < b.n;
    if (a.beta != b.beta) return a.beta < b.beta;
    return a.t < b.t;
  });
  return points;
}

}  // namespace cathybrid
