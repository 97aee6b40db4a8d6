#pragma once

#include <complex>
#include <string>

#include "qgc/bignum.hpp"
#include "qgc/int_poly.hpp"

namespace qgc {

/// lambda^a * s^m * Q(c) with s = sin(omega l)/omega, c = cos(omega l),
/// lambda = omega^2. Characteristic functions are only defined up to a
/// nonzero constant, so equality ignores `scale`; the scale records the
/// factor relating this canonical triple to the raw determinant it came
/// from (raw = scale * lambda^a s^m Q(c)), which scattering quantities need.
struct TrigForm {
  int a = 0;
  int m = 0;
  IntPoly Q;
  BigRat scale = 1;
};

/// Rewrites (a, m, Q) into canonical form: m >= 0, not both a > 0 and
/// m >= 2, Q primitive with positive leading coefficient. Uses
/// lambda s^2 = 1 - c^2 in both directions. A negative m needs (z^2 - 1)
/// to divide Q often enough; otherwise StructuralError.
TrigForm trig_canonicalize(int a, int m, const IntPoly& Q);

/// Triple equality of canonical forms (scale ignored).
bool trig_equal(const TrigForm& f, const TrigForm& g);

/// Strict weak order on (a, m, Q coefficients); scale ignored.
bool trig_less(const TrigForm& f, const TrigForm& g);

/// Numeric value of scale * lambda^a s^m Q(c) at omega (any complex omega,
/// omega = 0 handled by continuity s(0) = l).
std::complex<double> trig_eval(const TrigForm& f, std::complex<double> omega, double ell);

/// Same without the scale factor.
std::complex<double> trig_eval_unscaled(const TrigForm& f, std::complex<double> omega, double ell);

std::string to_string(const TrigForm& f);

}  // namespace qgc
