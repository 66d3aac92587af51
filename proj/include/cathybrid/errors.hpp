#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace cathybrid {

// Short numeric rendering for error messages.
inline std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

// Base of every error raised by the library. Callers that only care about
// "numerical domain vs. bad input" can catch the two intermediate classes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that violates a documented precondition (bad sizes, bad config).
class InputError : public Error {
 public:
  using Error::Error;
};

// The requested quantity is not representable to the promised accuracy.
class NumericalDomainError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

class OutcomeError : public InputError {
 public:
  using InputError::InputError;
};

class ConfigError : public InputError {
 public:
  using InputError::InputError;
};

class NormalizationError : public InputError {
 public:
  using InputError::InputError;
};

class TruncationError : public NumericalDomainError {
 public:
  using NumericalDomainError::NumericalDomainError;
};

class RangeError : public NumericalDomainError {
 public:
  using NumericalDomainError::NumericalDomainError;
};

class DegenerateStateError : public NumericalDomainError {
 public:
  using NumericalDomainError::NumericalDomainError;
};

class ConditioningError : public NumericalDomainError {
 public:
  using NumericalDomainError::NumericalDomainError;
};

class UndefinedMomentError : public NumericalDomainError {
 public:
  using NumericalDomainError::NumericalDomainError;
};

}  // namespace cathybrid
