#pragma once

#include <string>
#include <vector>

#include "cathybrid/fock.hpp"

namespace cathybrid {

// The parity label of an even (+) or odd (-) member of the family.
enum class Sign { Plus, Minus };

inline Parity parity_of(Sign s) { return s == Sign::Plus ? Parity::Even : Parity::Odd; }
inline double sign_value(Sign s) { return s == Sign::Plus ? 1.0 : -1.0; }
inline Sign sign_of(Parity p) { return p == Parity::Even ? Sign::Plus : Sign::Minus; }
const char* to_string(Sign s);

enum class StateKind { Sdlps, Superposition, Truncated };
const char* to_string(StateKind k);

// Declarative description of an input CV state.
//   Sdlps:          N (|l,-beta> +/- (-1)^l |l,beta>)
//   Superposition:  N sum_{k=0..K} b_k |Omega_+/-^(k)(beta)>
//   Truncated:      N sum_m d_m |2m>  (sign +)  or  N sum_m d_m |2m+1>  (sign -)
struct StateSpec {
  StateKind kind = StateKind::Sdlps;
  Sign sign = Sign::Plus;
  double beta = 0.0;
  int l = 0;
  std::vector<Complex> b;
  std::vector<Complex> d;

  static StateSpec sdlps(int l, Sign sign, double beta);
  static StateSpec superposition(std::vector<Complex> b, Sign sign, double beta);
  static StateSpec truncated(std::vector<Complex> d, Sign sign);
  // Truncated version of |Omega^(l)(beta)>: d_m = c_{l,2m}(beta) (or c_{l,2m+1}) for m < terms.
  static StateSpec truncated_from_sdlps(int l, Sign sign, double beta, int terms);

  // Throws ConfigError on a malformed spec (bad beta, empty or zero lists).
  void validate() const;
  Parity parity() const { return parity_of(sign); }
  // Highest Fock level a truncated spec occupies.
  int top_level() const;
};

struct NormalizedState {
  StateSpec spec;
  FockVector vector;
  double norm_factor = 0.0;
};

// N_+/-^(l)(beta) = (2 (1 +/- (-1)^l F(2 beta) c_ll(2 beta)))^(-1/2).
// Throws DegenerateStateError when the radicand vanishes.
double sdlps_norm_factor(int l, Sign sign, double beta);

// |Omega_+/-^(l)(beta)> built from its single-parity Fock expansion.
FockVector sdlps_vector(int l, Sign sign, double beta, int cutoff = kDefaultCutoff,
                        double tail_tol = kDefaultTailTolerance);

NormalizedState build(const StateSpec& spec, int cutoff = kDefaultCutoff, double tail_tol = kDefaultTailTolerance);

// <Omega_s^(k)(beta)|Omega_s^(m)(beta)> from the closed form.
double overlap_closed_form(int k, int m, Sign sign, double beta);
// Mixed-sign variant; opposite parities are orthogonal.
double overlap_closed_form(int k, Sign sign_k, int m, Sign sign_m, double beta);

// Gram matrix G_jk = <Omega^(j)|Omega^(k)>, j, k = 0..top, row-major.
std::vector<double> sdlps_gram(Sign sign, double beta, int top);

// Norm of sum_k coeffs_k |Omega_s^(k)(beta)>, using the closed-form Gram matrix.
double sdlps_combination_norm(const std::vector<Complex>& coeffs, Sign sign, double beta);

}  // namespace cathybrid
