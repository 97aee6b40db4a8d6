#pragma once

#include <complex>
#include <vector>

#include "qgc/bignum.hpp"
#include "qgc/int_poly.hpp"

namespace qgc {

/// Laurent polynomial in u over Q: sum of coeffs[k] * u^(lo + k). Both ends
/// are trimmed, so lo() and hi() are the true exponent range of a nonzero
/// value.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long lo, std::vector<BigRat> coeffs);
  static LaurentPoly monomial(BigRat c, long power);
  /// p(gamma) with gamma = (u + 1/u) / 2.
  static LaurentPoly substitute_gamma(const IntPoly& p);

  bool is_zero() const { return coeffs_.empty(); }
  long lo() const { return lo_; }
  long hi() const { return lo_ + static_cast<long>(coeffs_.size()) - 1; }
  BigRat coeff(long power) const;
  const std::vector<BigRat>& coefficients() const { return coeffs_; }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const BigRat& k, const LaurentPoly& a);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::complex<double> eval(std::complex<double> u) const;

  /// u^(-lo) * p, scaled to a primitive integer polynomial.
  IntPoly cleared() const;

 private:
  void trim();
  long lo_ = 0;
  std::vector<BigRat> coeffs_;
};

LaurentPoly pow(const LaurentPoly& p, unsigned exponent);

}  // namespace qgc
