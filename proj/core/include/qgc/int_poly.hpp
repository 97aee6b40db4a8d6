#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "qgc/bignum.hpp"

namespace qgc {

/// Dense univariate polynomial over Z. coefficients()[k] multiplies z^k;
/// trailing zeros are trimmed, so the zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> ascending);
  IntPoly(std::initializer_list<long> ascending);

  static IntPoly constant(BigInt c);
  static IntPoly monomial(BigInt c, std::size_t power);
  static IntPoly variable() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
  const BigInt& leading() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const BigInt& k);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& k) { return a *= k; }
  friend IntPoly operator*(const BigInt& k, IntPoly a) { return a *= k; }
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  IntPoly derivative() const;
  /// p(-z).
  IntPoly reflected() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

IntPoly pow(const IntPoly& p, unsigned exponent);

BigRat eval(const IntPoly& p, const BigRat& x);
double eval(const IntPoly& p, double x);
std::complex<double> eval(const IntPoly& p, std::complex<double> x);

/// Sign of p(x), computed exactly.
int sign_at(const IntPoly& p, const BigRat& x);

struct ContentSplit {
  BigInt content;     // > 0
  int sign = 1;       // p = sign * content * primitive
  IntPoly primitive;  // content 1, positive leading coefficient
};

/// Throws InvalidInput on the zero polynomial.
ContentSplit content_primitive(const IntPoly& p);
IntPoly primitive_part(const IntPoly& p);
BigInt content(const IntPoly& p);

/// Pseudo-remainder: lc(d)^(deg p - deg d + 1) * p mod d.
IntPoly pseudo_remainder(const IntPoly& p, const IntPoly& d);

/// Subresultant PRS gcd, returned primitive with positive leading
/// coefficient. gcd(p, 0) = primitive(p). Throws if both are zero.
IntPoly poly_gcd(const IntPoly& p, const IntPoly& q);

/// Quotient p / d when d divides p in Z[z]; StructuralError otherwise.
IntPoly exact_div(const IntPoly& p, const IntPoly& d);

/// Square-free decomposition of a nonzero polynomial: primitive square-free,
/// pairwise coprime factors f_i with multiplicity i such that
/// primitive(p) = prod f_i^i. Constant factors are omitted.
std::vector<std::pair<IntPoly, unsigned>> square_free_decomposition(const IntPoly& p);

/// Human-readable form, highest power first, e.g. "4*z^2 + z - 1".
std::string to_string(const IntPoly& p, char var = 'z');

}  // namespace qgc
