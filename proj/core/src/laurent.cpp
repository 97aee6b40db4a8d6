#include "qgc/laurent.hpp"

#include "qgc/error.hpp"

namespace qgc {

LaurentPoly::LaurentPoly(long lo, std::vector<BigRat> coeffs) : lo_(lo), coeffs_(std::move(coeffs)) {
  trim();
}

LaurentPoly LaurentPoly::monomial(BigRat c, long power) { return LaurentPoly(power, {std::move(c)}); }

LaurentPoly LaurentPoly::substitute_gamma(const IntPoly& p) {
  const LaurentPoly gamma(-1, {BigRat(1, 2), BigRat(0), BigRat(1, 2)});
  LaurentPoly acc;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * gamma + monomial(BigRat(*it), 0);
  return acc;
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    lo_ += static_cast<long>(lead);
  }
  if (coeffs_.empty()) lo_ = 0;
}

BigRat LaurentPoly::coeff(long power) const {
  if (is_zero() || power < lo_ || power > hi()) return 0;
  return coeffs_[static_cast<std::size_t>(power - lo_)];
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const long lo = std::min(a.lo(), b.lo());
  const long hi = std::max(a.hi(), b.hi());
  std::vector<BigRat> out(static_cast<std::size_t>(hi - lo + 1));
  for (long k = lo; k <= hi; ++k) out[static_cast<std::size_t>(k - lo)] = a.coeff(k) + b.coeff(k);
  return LaurentPoly(lo, std::move(out));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + BigRat(-1) * b; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPoly(a.lo_ + b.lo_, std::move(out));
}

LaurentPoly operator*(const BigRat& k, const LaurentPoly& a) {
  std::vector<BigRat> out = a.coeffs_;
  for (auto& c : out) c *= k;
  return LaurentPoly(a.lo_, std::move(out));
}

std::complex<double> LaurentPoly::eval(std::complex<double> u) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + it->get_d();
  std::complex<double> shift = 1.0;
  const std::complex<double> base = lo_ < 0 ? 1.0 / u : u;
  for (long k = 0; k < std::abs(lo_); ++k) shift *= base;
  return acc * shift;
}

IntPoly LaurentPoly::cleared() const {
  if (is_zero()) throw InvalidInput("cannot clear the zero Laurent polynomial");
  BigInt denominators = 1;
  for (const auto& c : coeffs_) mpz_lcm(denominators.get_mpz_t(), denominators.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> ints;
  ints.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    BigRat scaled = c * denominators;
    ints.push_back(scaled.get_num());
  }
  return primitive_part(IntPoly(std::move(ints)));
}

LaurentPoly pow(const LaurentPoly& p, unsigned exponent) {
  LaurentPoly out = LaurentPoly::monomial(1, 0);
  for (unsigned k = 0; k < exponent; ++k) out = out * p;
  return out;
}

}  // namespace qgc
