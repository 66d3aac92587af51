#include "cathybrid/hybrid.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "cathybrid/entanglement.hpp"
#include "cathybrid/errors.hpp"

namespace cathybrid {

DelocalizedPhoton::DelocalizedPhoton(Complex a0, Complex a1) : a0_(a0), a1_(a1) {
  if (std::abs(std::norm(a0) + std::norm(a1) - 1.0) > 1e-12) {
    throw ConfigError("delocalized photon amplitudes must satisfy |a0|^2 + |a1|^2 = 1");
  }
  if (a0 == Complex{} || a1 == Complex{}) throw ConfigError("delocalized photon needs both a0 and a1 nonzero");
}

DelocalizedPhoton DelocalizedPhoton::balanced() {
  const double h = std::sqrt(0.5);
  return DelocalizedPhoton(h, h);
}

DelocalizedPhoton DelocalizedPhoton::normalized(Complex a0, Complex a1) {
  const double nrm = std::sqrt(std::norm(a0) + std::norm(a1));
  if (!(nrm > 0.0) || !std::isfinite(nrm)) throw ConfigError("delocalized photon amplitudes are zero");
  return DelocalizedPhoton(a0 / nrm, a1 / nrm);
}

ParityLabels expected_parities(Parity input, int n) {
  const Parity psi = combine(input, parity_of(n));
  return {psi, flip(psi)};
}

HybridEvolution::HybridEvolution(const NormalizedState& input, const BeamSplitterParams& params)
    : input_parity_(input.spec.parity()), cutoff_(input.vector.cutoff()), vacuum_branch_(0, 0), photon_branch_(0, 0) {
  const BeamSplitter bs(params, cutoff_ + 1);
  vacuum_branch_ = bs.apply_to_product(input.vector.resized(cutoff_ + 1), 0);
  photon_branch_ = bs.apply_to_product(input.vector, 1);
}

ConditionalResult HybridEvolution::condition(int n, const DelocalizedPhoton& photon) const {
  if (n < 0 || n > max_outcome()) {
    throw OutcomeError("outcome " + std::to_string(n) + " outside 0.." + std::to_string(max_outcome()));
  }
  const Projection u = project_mode2(vacuum_branch_, n);
  const Projection v = project_mode2(photon_branch_, n);

  ConditionalResult res;
  res.n = n;
  res.psi_weight = u.weight;
  res.phi_weight = v.weight;
  res.probability = std::norm(photon.a0()) * u.weight + std::norm(photon.a1()) * v.weight;
  const auto labels = expected_parities(input_parity_, n);
  res.psi_parity = labels.psi;
  res.phi_parity = labels.phi;

  const bool u_zero = u.weight < kZeroBranchWeight;
  const bool v_zero = v.weight < kZeroBranchWeight;
  res.psi = u_zero ? FockVector(u.branch.cutoff()) : u.branch.normalized();
  res.phi = v_zero ? FockVector(v.branch.cutoff()) : v.branch.normalized();
  if (u_zero && v_zero) {
    res.defined = false;
    res.separable = true;
    res.probability = 0.0;
    res.b_param = std::numeric_limits<double>::quiet_NaN();
    return res;
  }
  if (u_zero || v_zero) {
    res.separable = true;
    res.negativity = 0.0;
    res.b_param = u_zero ? std::numeric_limits<double>::infinity() : 0.0;
    return res;
  }
  res.b_param = std::sqrt(v.weight / u.weight);
  res.negativity = negativity_closed(photon.a0(), photon.a1(), res.b_abs());
  return res;
}

ConditionalResult evolve_and_condition(const NormalizedState& input, const DelocalizedPhoton& photon,
                                       const BeamSplitterParams& params, int n) {
  return HybridEvolution(input, params).condition(n, photon);
}

std::vector<ConditionalResult> outcome_distribution(const NormalizedState& input, const DelocalizedPhoton& photon,
                                                    const BeamSplitterParams& params) {
  const HybridEvolution evo(input, params);
  std::vector<ConditionalResult> out;
  out.reserve(static_cast<std::size_t>(evo.max_outcome() + 1));
  for (int n = 0; n <= evo.max_outcome(); ++n) out.push_back(evo.condition(n, photon));
  return out;
}

}  // namespace cathybrid
