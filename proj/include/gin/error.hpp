#pragma once

#include <stdexcept>
#include <string>

namespace gin {

/// Operands live in rings with different variable counts.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Polynomials from different rings were combined.
class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual or JSON input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation ran past its wall-clock or size cap. No partial result is kept.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sampling trials failed to produce a strict majority ideal.
class Inconclusive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Hilbert function that no lexsegment ideal realizes within the horizon.
class Inadmissible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gin
