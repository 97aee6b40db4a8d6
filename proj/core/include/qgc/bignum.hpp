#pragma once

#include <gmpxx.h>

#include <string>

namespace qgc {

using BigInt = mpz_class;
/// Always canonical: denominator > 0, gcd(|num|, den) = 1.
using BigRat = mpq_class;

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

/// "p" for integers, "p/q" otherwise.
inline std::string to_decimal(const BigRat& v) { return v.get_str(10); }

BigInt parse_bigint(const std::string& text);
BigRat parse_bigrat(const std::string& text);

}  // namespace qgc
