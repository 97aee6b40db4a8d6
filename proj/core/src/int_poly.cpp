#include "qgc/int_poly.hpp"

#include <algorithm>
#include <sstream>

#include "qgc/error.hpp"

namespace qgc {

BigInt parse_bigint(const std::string& text) {
  BigInt v;
  if (v.set_str(text, 10) != 0) throw InvalidInput("not an integer: '" + text + "'");
  return v;
}

BigRat parse_bigrat(const std::string& text) {
  BigRat v;
  if (v.set_str(text, 10) != 0 || v.get_den() == 0) {
    throw InvalidInput("not a rational: '" + text + "'");
  }
  v.canonicalize();
  return v;
}

IntPoly::IntPoly(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(BigInt c) { return IntPoly(std::vector<BigInt>{std::move(c)}); }

IntPoly IntPoly::monomial(BigInt c, std::size_t power) {
  std::vector<BigInt> v(power + 1, 0);
  v[power] = std::move(c);
  return IntPoly(std::move(v));
}

const BigInt& IntPoly::leading() const {
  if (coeffs_.empty()) throw InvalidInput("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

IntPoly& IntPoly::operator*=(const BigInt& k) {
  for (auto& c : coeffs_) c *= k;
  trim();
  return *this;
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return IntPoly(std::move(out));
}

IntPoly IntPoly::reflected() const {
  IntPoly out = *this;
  for (std::size_t k = 1; k < out.coeffs_.size(); k += 2) out.coeffs_[k] = -out.coeffs_[k];
  return out;
}

IntPoly pow(const IntPoly& p, unsigned exponent) {
  IntPoly result = IntPoly::constant(1);
  IntPoly base = p;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

BigRat eval(const IntPoly& p, const BigRat& x) {
  BigRat acc = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + BigRat(*it);
  return acc;
}

double eval(const IntPoly& p, double x) {
  double acc = 0.0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

std::complex<double> eval(const IntPoly& p, std::complex<double> x) {
  std::complex<double> acc = 0.0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

int sign_at(const IntPoly& p, const BigRat& x) { return sgn(eval(p, x)); }

BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p.coefficients()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ContentSplit content_primitive(const IntPoly& p) {
  if (p.is_zero()) throw InvalidInput("content of the zero polynomial is undefined");
  ContentSplit out;
  out.content = content(p);
  out.sign = sgn(p.leading()) < 0 ? -1 : 1;
  std::vector<BigInt> prim = p.coefficients();
  for (auto& c : prim) {
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), out.content.get_mpz_t());
    if (out.sign < 0) c = -c;
  }
  out.primitive = IntPoly(std::move(prim));
  return out;
}

IntPoly primitive_part(const IntPoly& p) { return content_primitive(p).primitive; }

IntPoly pseudo_remainder(const IntPoly& p, const IntPoly& d) {
  if (d.is_zero()) throw InvalidInput("pseudo-remainder by the zero polynomial");
  const long dd = d.degree();
  if (p.degree() < dd) return p;
  std::vector<BigInt> r = p.coefficients();
  const auto& dc = d.coefficients();
  const BigInt& lc = d.leading();
  long steps = p.degree() - dd + 1;
  for (long top = p.degree(); top >= dd; --top) {
    const BigInt lead = r[static_cast<std::size_t>(top)];
    for (long k = 0; k < top; ++k) r[static_cast<std::size_t>(k)] *= lc;
    r[static_cast<std::size_t>(top)] = 0;
    --steps;
    if (lead == 0) continue;
    const long shift = top - dd;
    for (long k = 0; k < dd; ++k) {
      mpz_submul(r[static_cast<std::size_t>(k + shift)].get_mpz_t(), lead.get_mpz_t(),
                 dc[static_cast<std::size_t>(k)].get_mpz_t());
    }
  }
  return IntPoly(std::move(r));
}

IntPoly poly_gcd(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() && q.is_zero()) throw InvalidInput("gcd(0, 0) is undefined");
  if (q.is_zero()) return primitive_part(p);
  if (p.is_zero()) return primitive_part(q);

  IntPoly a = primitive_part(p);
  IntPoly b = primitive_part(q);
  if (a.degree() < b.degree()) std::swap(a, b);
  if (b.degree() == 0) return IntPoly::constant(1);

  // Subresultant PRS (Collins / Brown).
  BigInt g = 1;
  BigInt h = 1;
  while (true) {
    const long delta = a.degree() - b.degree();
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    if (r.degree() == 0) return IntPoly::constant(1);
    BigInt divisor = g;
    for (long k = 0; k < delta; ++k) divisor *= h;
    std::vector<BigInt> rc = r.coefficients();
    for (auto& c : rc) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    a = std::move(b);
    b = IntPoly(std::move(rc));
    g = a.leading();
    if (delta > 0) {
      // h <- g^delta / h^(delta - 1), exact.
      BigInt num = 1;
      for (long k = 0; k < delta; ++k) num *= g;
      BigInt den = 1;
      for (long k = 1; k < delta; ++k) den *= h;
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
  return primitive_part(b);
}

IntPoly exact_div(const IntPoly& p, const IntPoly& d) {
  if (d.is_zero()) throw InvalidInput("division by the zero polynomial");
  if (p.is_zero()) return {};
  if (p.degree() < d.degree()) {
    throw StructuralError("exact_div: " + to_string(d) + " does not divide " + to_string(p));
  }
  std::vector<BigInt> r = p.coefficients();
  const auto& dc = d.coefficients();
  const long dd = d.degree();
  const BigInt& lc = d.leading();
  std::vector<BigInt> quotient(static_cast<std::size_t>(p.degree() - dd + 1), 0);
  for (long k = p.degree() - dd; k >= 0; --k) {
    BigInt& top = r[static_cast<std::size_t>(k + dd)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) {
      throw StructuralError("exact_div: " + to_string(d) + " does not divide " + to_string(p) +
                            " over Z");
    }
    BigInt q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    for (long j = 0; j <= dd; ++j) {
      mpz_submul(r[static_cast<std::size_t>(k + j)].get_mpz_t(), q.get_mpz_t(),
                 dc[static_cast<std::size_t>(j)].get_mpz_t());
    }
    quotient[static_cast<std::size_t>(k)] = std::move(q);
  }
  for (long j = 0; j < dd; ++j) {
    if (r[static_cast<std::size_t>(j)] != 0) {
      throw StructuralError("exact_div: nonzero remainder dividing " + to_string(p) + " by " +
                            to_string(d));
    }
  }
  return IntPoly(std::move(quotient));
}

namespace {

// a / b over Q, returned as the primitive integer polynomial with the same
// roots. Callers only need the result up to a nonzero scalar.
IntPoly quotient_up_to_scalar(const IntPoly& a, const IntPoly& b) {
  // lc(b)^k * a is divisible by b over Z for k = deg a - deg b + 1.
  IntPoly scaled = a;
  BigInt lc_power = 1;
  for (long k = 0; k <= a.degree() - b.degree(); ++k) lc_power *= b.leading();
  scaled *= lc_power;
  return primitive_part(exact_div(scaled, b));
}

}  // namespace

std::vector<std::pair<IntPoly, unsigned>> square_free_decomposition(const IntPoly& p) {
  if (p.is_zero()) throw InvalidInput("square-free decomposition of the zero polynomial");
  std::vector<std::pair<IntPoly, unsigned>> out;
  IntPoly f = primitive_part(p);
  if (f.degree() == 0) return out;

  // Musser's variant: repeatedly split off the square-free part of what is
  // left. Avoids the derivative bookkeeping of Yun's algorithm under scaling.
  IntPoly rest = poly_gcd(f, f.derivative());       // prod f_i^(i-1)
  IntPoly squarefree = quotient_up_to_scalar(f, rest);  // prod f_i
  unsigned multiplicity = 1;
  while (squarefree.degree() > 0) {
    IntPoly next = poly_gcd(squarefree, rest);  // prod_{i > k} f_i
    IntPoly factor = quotient_up_to_scalar(squarefree, next);
    if (factor.degree() > 0) out.emplace_back(std::move(factor), multiplicity);
    if (next.degree() > 0) rest = quotient_up_to_scalar(rest, next);
    squarefree = std::move(next);
    ++multiplicity;
  }
  return out;
}

std::string to_string(const IntPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long k = p.degree(); k >= 0; --k) {
    const BigInt& c = p.coefficients()[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace qgc
