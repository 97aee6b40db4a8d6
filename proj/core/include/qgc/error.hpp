#pragma once

#include <stdexcept>
#include <string>

namespace qgc {

/// Caller supplied something outside an operation's domain (bad vertex,
/// unknown fixture, malformed file, size limit exceeded).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An algebraic identity the construction relies on did not hold: a
/// division that must be exact left a remainder, a determinant did not
/// factor as expected, two independent routes disagreed.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Floating-point failure: non-convergence, overflow, evaluation at a pole.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qgc
