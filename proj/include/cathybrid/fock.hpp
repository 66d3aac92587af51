#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace cathybrid {

using Complex = std::complex<double>;

inline constexpr int kDefaultCutoff = 64;
// Number of top Fock levels whose mass must stay below the tail tolerance.
inline constexpr int kTailLevels = 8;
inline constexpr double kDefaultTailTolerance = 1e-12;

enum class Parity { Even, Odd };

inline Parity parity_of(long n) { return (n % 2 == 0) ? Parity::Even : Parity::Odd; }
inline Parity flip(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }
inline Parity combine(Parity a, Parity b) { return a == b ? Parity::Even : Parity::Odd; }
const char* to_string(Parity p);

// Amplitudes of one optical mode over |0>..|cutoff>.
class FockVector {
 public:
  FockVector() : amps_(1) {}
  explicit FockVector(int cutoff);
  explicit FockVector(std::vector<Complex> amplitudes);

  static FockVector basis(int n, int cutoff);

  int cutoff() const { return static_cast<int>(amps_.size()) - 1; }
  std::size_t size() const { return amps_.size(); }

  Complex operator[](std::size_t n) const { return amps_[n]; }
  Complex& operator[](std::size_t n) { return amps_[n]; }
  // Zero beyond the cutoff instead of throwing.
  Complex at_or_zero(long n) const;

  std::span<const Complex> amplitudes() const { return amps_; }
  std::span<Complex> amplitudes() { return amps_; }

  double norm_squared() const;
  double norm() const;
  // Sum of |a_n|^2 for n >= from.
  double tail_mass(int from) const;

  FockVector normalized() const;
  // Copy with a different cutoff; extra levels are zero, dropped levels are lost.
  FockVector resized(int cutoff) const;

  FockVector& operator+=(const FockVector& other);
  FockVector& operator*=(Complex s);

 private:
  std::vector<Complex> amps_;
};

FockVector operator+(FockVector a, const FockVector& b);
FockVector operator*(Complex s, FockVector v);

// <u|v>, conjugate-linear in u.
Complex inner_product(const FockVector& u, const FockVector& v);

// 1 - |<u|v>|^2 / (|u|^2 |v|^2); cutoffs may differ.
double infidelity(const FockVector& u, const FockVector& v);

struct ParityMasses {
  double even = 0.0;
  double odd = 0.0;
};
ParityMasses parity_masses(const FockVector& v);

// Mass carried by Fock levels of the given parity.
double mass_of_parity(const FockVector& v, Parity p);

// Throws TruncationError when the top kTailLevels levels carry more than `tol`.
void check_tail(const FockVector& v, double tol, const char* what);

// Joint amplitudes of modes (1, 2), indexed (n1, n2), row-major in n1.
class TwoModeState {
 public:
  TwoModeState(int cutoff1, int cutoff2);

  int cutoff1() const { return c1_; }
  int cutoff2() const { return c2_; }

  Complex operator()(int n1, int n2) const { return amps_[index(n1, n2)]; }
  Complex& operator()(int n1, int n2) { return amps_[index(n1, n2)]; }

  double norm_squared() const;

  // |v> (x) |n>.
  static TwoModeState product(const FockVector& mode1, int n2, int cutoff2);

 private:
  std::size_t index(int n1, int n2) const {
    return static_cast<std::size_t>(n1) * static_cast<std::size_t>(c2_ + 1) + static_cast<std::size_t>(n2);
  }
  int c1_;
  int c2_;
  std::vector<Complex> amps_;
};

struct Projection {
  FockVector branch;  // unnormalized <n|_2 s
  double weight = 0.0;
};

// Project mode 2 on |n>. Throws OutcomeError if n is beyond the mode-2 cutoff.
Projection project_mode2(const TwoModeState& s, int n);

}  // namespace cathybrid
