#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qgc/bignum.hpp"

namespace qgc {

/// Exponent triple (i, j, k) of the monomial c^i s^j lambda^k.
struct Exponents {
  unsigned c = 0;
  unsigned s = 0;
  unsigned lambda = 0;
  friend bool operator==(const Exponents&, const Exponents&) = default;
};

/// Sparse polynomial over Z in the commuting symbols c, s, lambda. Terms are
/// kept sorted by descending lex order (c, then s, then lambda) with no zero
/// coefficients, so equal polynomials have equal representations.
class MultiPoly {
 public:
  using Key = std::uint64_t;
  using Term = std::pair<Key, BigInt>;

  MultiPoly() = default;
  MultiPoly(long constant);  // NOLINT: integers embed implicitly
  static MultiPoly term(BigInt coeff, Exponents e);
  static MultiPoly c() { return term(1, {1, 0, 0}); }
  static MultiPoly s() { return term(1, {0, 1, 0}); }
  static MultiPoly lambda() { return term(1, {0, 0, 1}); }
  /// Sums terms with equal keys and drops zeros; any input order.
  static MultiPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  unsigned total_degree() const;

  static Key pack(Exponents e);
  static Exponents unpack(Key k);

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  std::vector<Term> terms_;
};

/// a / d when d divides a in Z[c, s, lambda]; StructuralError otherwise.
MultiPoly exact_div(const MultiPoly& a, const MultiPoly& d);

using MultiMatrix = std::vector<std::vector<MultiPoly>>;

/// Determinant by fraction-free Bareiss elimination with exact division,
/// pivoting on the sparsest available entry.
MultiPoly multi_det(MultiMatrix m);

/// Determinant by Laplace expansion along the first row. Exponential; for
/// cross-checking small matrices.
MultiPoly cofactor_det(const MultiMatrix& m);

/// Normal form modulo lambda*s^2 = 1 - c^2: no monomial keeps both s^2 and
/// lambda.
MultiPoly reduce_relation(const MultiPoly& p);

std::string to_string(const MultiPoly& p);

}  // namespace qgc
