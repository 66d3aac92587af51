#pragma once

#include <vector>

#include "cathybrid/beam_splitter.hpp"
#include "cathybrid/fock.hpp"
#include "cathybrid/hybrid.hpp"
#include "cathybrid/state_family.hpp"

namespace cathybrid {

// Denominators smaller than this make the analytic route unreliable; callers
// fall back to HybridEvolution.
inline constexpr double kConditioningFloor = 1e-8;

// Analytic description of one heralded outcome for an input |Omega_s^(l)(beta)>
// (or a finite superposition of them). Both branches are expanded over
// family members at the reduced amplitude beta * t:
//   |psi> = L sum_p x_p |Omega_{psi_sign}^(p)(beta t)>,   p = 0..l
//   |phi> = K sum_p y_p |Omega_{phi_sign}^(p)(beta t)>,   p = 0..l+1
// with x_0 = y_0 = 1, L, K > 0.
struct ClosedFormBranches {
  Sign psi_sign = Sign::Plus;
  Sign phi_sign = Sign::Minus;
  double reduced_beta = 0.0;  // beta * t
  std::vector<Complex> x;
  std::vector<Complex> y;
  double psi_norm = 0.0;  // L
  double phi_norm = 0.0;  // K

  FockVector psi(int cutoff) const;
  FockVector phi(int cutoff) const;
};

struct ClosedFormOutcome {
  ClosedFormBranches branches;
  Complex b_param;
  double probability = 0.0;
  double negativity = 0.0;
};

ClosedFormBranches closed_form_amplitudes(int l, Sign sign, int n, double beta, const BeamSplitterParams& params);
Complex closed_form_B(int l, Sign sign, int n, double beta, const BeamSplitterParams& params);
double closed_form_probability(int l, Sign sign, int n, double beta, const BeamSplitterParams& params,
                               const DelocalizedPhoton& photon);
ClosedFormOutcome closed_form_outcome(int l, Sign sign, int n, double beta, const BeamSplitterParams& params,
                                      const DelocalizedPhoton& photon);

// Superposition input N sum_k b_k |Omega_s^(k)(beta)>. The f and g tables are
// the branch sums before normalization; x, y follow from them.
struct SuperpositionClosedForm {
  std::vector<Complex> f;
  std::vector<Complex> g;
  ClosedFormOutcome outcome;
};

SuperpositionClosedForm superposition_closed_form(const std::vector<Complex>& b, Sign sign, int n, double beta,
                                                  const BeamSplitterParams& params, const DelocalizedPhoton& photon);

}  // namespace cathybrid
