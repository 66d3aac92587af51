#include "cathybrid/fock.hpp"

#include <cmath>
#include <string>

#include "cathybrid/errors.hpp"

namespace cathybrid {

const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

FockVector::FockVector(int cutoff) {
  if (cutoff < 0) throw DimensionError("cutoff must be nonnegative");
  amps_.assign(static_cast<std::size_t>(cutoff) + 1, Complex{});
}

FockVector::FockVector(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.empty()) throw DimensionError("a Fock vector needs at least one level");
}

FockVector FockVector::basis(int n, int cutoff) {
  if (n < 0 || n > cutoff) throw DimensionError("basis index " + std::to_string(n) + " outside cutoff");
  FockVector v(cutoff);
  v[static_cast<std::size_t>(n)] = 1.0;
  return v;
}

Complex FockVector::at_or_zero(long n) const {
  if (n < 0 || n > cutoff()) return {};
  return amps_[static_cast<std::size_t>(n)];
}

double FockVector::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

double FockVector::norm() const { return std::sqrt(norm_squared()); }

double FockVector::tail_mass(int from) const {
  double s = 0.0;
  for (int n = std::max(from, 0); n <= cutoff(); ++n) s += std::norm(amps_[static_cast<std::size_t>(n)]);
  return s;
}

FockVector FockVector::normalized() const {
  const double nrm = norm();
  if (nrm == 0.0) throw NormalizationError("cannot normalize the zero vector");
  FockVector out = *this;
  out *= Complex(1.0 / nrm);
  return out;
}

FockVector FockVector::resized(int cutoff) const {
  FockVector out(cutoff);
  const int top = std::min(cutoff, this->cutoff());
  for (int n = 0; n <= top; ++n) out[static_cast<std::size_t>(n)] = amps_[static_cast<std::size_t>(n)];
  return out;
}

FockVector& FockVector::operator+=(const FockVector& other) {
  if (other.size() != size()) throw DimensionError("cutoff mismatch in vector sum");
  for (std::size_t n = 0; n < amps_.size(); ++n) amps_[n] += other.amps_[n];
  return *this;
}

FockVector& FockVector::operator*=(Complex s) {
  for (auto& a : amps_) a *= s;
  return *this;
}

FockVector operator+(FockVector a, const FockVector& b) { return a += b; }

FockVector operator*(Complex s, FockVector v) { return v *= s; }

Complex inner_product(const FockVector& u, const FockVector& v) {
  if (u.size() != v.size()) {
    throw DimensionError("inner product of vectors with cutoffs " + std::to_string(u.cutoff()) + " and " +
                         std::to_string(v.cutoff()));
  }
  Complex s{};
  for (std::size_t n = 0; n < u.size(); ++n) s += std::conj(u[n]) * v[n];
  return s;
}

double infidelity(const FockVector& u, const FockVector& v) {
  const int c = std::max(u.cutoff(), v.cutoff());
  const FockVector a = u.resized(c);
  const FockVector b = v.resized(c);
  const double nn = a.norm_squared() * b.norm_squared();
  if (nn == 0.0) throw NormalizationError("fidelity with a zero vector");
  return 1.0 - std::norm(inner_product(a, b)) / nn;
}

ParityMasses parity_masses(const FockVector& v) {
  ParityMasses m;
  for (std::size_t n = 0; n < v.size(); ++n) (n % 2 == 0 ? m.even : m.odd) += std::norm(v[n]);
  return m;
}

double mass_of_parity(const FockVector& v, Parity p) {
  const ParityMasses m = parity_masses(v);
  return p == Parity::Even ? m.even : m.odd;
}

void check_tail(const FockVector& v, double tol, const char* what) {
  const double tail = v.tail_mass(v.cutoff() - kTailLevels + 1);
  if (tail > tol) {
    throw TruncationError(std::string(what) + ": tail mass " + num(tail) + " above tolerance at cutoff " +
                          std::to_string(v.cutoff()) + "; raise the cutoff");
  }
}

TwoModeState::TwoModeState(int cutoff1, int cutoff2) : c1_(cutoff1), c2_(cutoff2) {
  if (cutoff1 < 0 || cutoff2 < 0) throw DimensionError("cutoffs must be nonnegative");
  amps_.assign(static_cast<std::size_t>(c1_ + 1) * static_cast<std::size_t>(c2_ + 1), Complex{});
}

double TwoModeState::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

TwoModeState TwoModeState::product(const FockVector& mode1, int n2, int cutoff2) {
  TwoModeState s(mode1.cutoff(), cutoff2);
  if (n2 < 0 || n2 > cutoff2) throw DimensionError("mode-2 index outside cutoff");
  for (int n1 = 0; n1 <= mode1.cutoff(); ++n1) s(n1, n2) = mode1[static_cast<std::size_t>(n1)];
  return s;
}

Projection project_mode2(const TwoModeState& s, int n) {
  if (n < 0 || n > s.cutoff2()) {
    throw OutcomeError("outcome " + std::to_string(n) + " outside mode-2 cutoff " + std::to_string(s.cutoff2()));
  }
  Projection p{FockVector(s.cutoff1()), 0.0};
  for (int n1 = 0; n1 <= s.cutoff1(); ++n1) p.branch[static_cast<std::size_t>(n1)] = s(n1, n);
  p.weight = p.branch.norm_squared();
  return p;
}

}  // namespace cathybrid
