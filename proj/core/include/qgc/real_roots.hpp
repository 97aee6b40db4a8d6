#pragma once

#include <vector>

#include "qgc/bignum.hpp"
#include "qgc/int_poly.hpp"

namespace qgc {

/// One real root: an isolating interval [lo, hi] of width <= tol containing
/// exactly one distinct root, its midpoint, and its multiplicity in p.
struct RealRoot {
  BigRat lo;
  BigRat hi;
  double value = 0.0;
  unsigned multiplicity = 1;
  bool exact = false;  // lo == hi is the root itself
};

/// Sturm sequence of a square-free polynomial, each term scaled by a
/// positive constant (which leaves sign counts unchanged).
std::vector<IntPoly> sturm_sequence(const IntPoly& f);

/// Number of distinct real roots of f in (a, b], from its Sturm sequence.
std::size_t sturm_count(const std::vector<IntPoly>& seq, const BigRat& a, const BigRat& b);

/// All real roots of p in [lo, hi], sorted ascending. Distinct roots are
/// isolated per square-free factor; multiplicities come from the
/// square-free decomposition.
std::vector<RealRoot> real_roots_in(const IntPoly& p, const BigRat& lo, const BigRat& hi,
                                    double tol = 1e-12);

/// Real roots anywhere on the line (uses a Cauchy bound).
std::vector<RealRoot> real_roots(const IntPoly& p, double tol = 1e-12);

}  // namespace qgc
