#pragma once

#include <optional>
#include <vector>

#include "cathybrid/beam_splitter.hpp"
#include "cathybrid/fock.hpp"
#include "cathybrid/state_family.hpp"

namespace cathybrid {

// a0 |0>_2 |1>_3 + a1 |1>_2 |0>_3; both amplitudes nonzero.
class DelocalizedPhoton {
 public:
  DelocalizedPhoton(Complex a0, Complex a1);
  static DelocalizedPhoton balanced();
  // Rescales (a0, a1) onto the unit circle first; for user-entered values.
  static DelocalizedPhoton normalized(Complex a0, Complex a1);

  Complex a0() const { return a0_; }
  Complex a1() const { return a1_; }

 private:
  Complex a0_;
  Complex a1_;
};

// One heralded outcome n. The conditional state of modes 1 and 3 is
//   a0 sqrt(psi_weight) |psi>|1> + a1 sqrt(phi_weight) |phi>|0>   (unnormalized),
// so |B| = sqrt(phi_weight / psi_weight).
struct ConditionalResult {
  int n = 0;
  FockVector psi;
  FockVector phi;
  double psi_weight = 0.0;
  double phi_weight = 0.0;
  Complex b_param;
  double probability = 0.0;
  double negativity = 0.0;
  Parity psi_parity = Parity::Even;
  Parity phi_parity = Parity::Odd;
  bool separable = false;
  // False when neither branch can produce n photons (probability 0).
  bool defined = true;

  double b_abs() const { return std::abs(b_param); }
};

// Parities of |psi> and |phi> for an input of parity `input` and outcome n.
struct ParityLabels {
  Parity psi;
  Parity phi;
};
ParityLabels expected_parities(Parity input, int n);

// Branch weights below this are treated as exactly vanishing.
inline constexpr double kZeroBranchWeight = 1e-30;

// Direct evolution: mixes the input with the photon on the beam splitter once
// and answers conditioning queries for any outcome.
class HybridEvolution {
 public:
  HybridEvolution(const NormalizedState& input, const BeamSplitterParams& params);

  // Highest photon number the auxiliary mode can register.
  int max_outcome() const { return vacuum_branch_.cutoff2(); }
  Parity input_parity() const { return input_parity_; }

  ConditionalResult condition(int n, const DelocalizedPhoton& photon) const;

 private:
  Parity input_parity_;
  int cutoff_;
  TwoModeState vacuum_branch_;  // U (input (x) |0>)
  TwoModeState photon_branch_;  // U (input (x) |1>)
};

ConditionalResult evolve_and_condition(const NormalizedState& input, const DelocalizedPhoton& photon,
                                       const BeamSplitterParams& params, int n);

// Every outcome 0..max_outcome.
std::vector<ConditionalResult> outcome_distribution(const NormalizedState& input, const DelocalizedPhoton& photon,
                                                    const BeamSplitterParams& params);

}  // namespace cathybrid
