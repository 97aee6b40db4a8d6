#include "qgc/real_roots.hpp"

#include <algorithm>

#include "qgc/error.hpp"

namespace qgc {
namespace {

int variations(const std::vector<IntPoly>& seq, const BigRat& x) {
  int count = 0;
  int last = 0;
  for (const auto& f : seq) {
    const int s = sign_at(f, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// Remainder of a by b, up to a positive scalar.
IntPoly positive_remainder(const IntPoly& a, const IntPoly& b) {
  IntPoly r = pseudo_remainder(a, b);
  const long power = a.degree() - b.degree() + 1;
  if (sgn(b.leading()) < 0 && power % 2 != 0) r = -r;
  if (r.is_zero()) return r;
  const BigInt c = content(r);
  std::vector<BigInt> coeffs = r.coefficients();
  for (auto& v : coeffs) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
  return IntPoly(std::move(coeffs));
}

BigRat rational_from(double v) {
  BigRat r(v);
  r.canonicalize();
  return r;
}

void isolate(const IntPoly& f, const std::vector<IntPoly>& seq, BigRat a, BigRat b,
             std::size_t count, const BigRat& width, unsigned multiplicity,
             std::vector<RealRoot>& out) {
  if (count == 0) return;
  if (count == 1) {
    // Shrink (a, b] around its single root.
    if (sign_at(f, b) == 0) {
      out.push_back({b, b, b.get_d(), multiplicity, true});
      return;
    }
    while (b - a > width) {
      BigRat mid = (a + b) / 2;
      if (sign_at(f, mid) == 0) {
        out.push_back({mid, mid, mid.get_d(), multiplicity, true});
        return;
      }
      if (sturm_count(seq, a, mid) == 1) {
        b = mid;
      } else {
        a = mid;
      }
    }
    const BigRat mid = (a + b) / 2;
    out.push_back({a, b, mid.get_d(), multiplicity, false});
    return;
  }
  BigRat mid = (a + b) / 2;
  const std::size_t left = sturm_count(seq, a, mid);
  isolate(f, seq, a, mid, left, width, multiplicity, out);
  isolate(f, seq, mid, b, count - left, width, multiplicity, out);
}

}  // namespace

std::vector<IntPoly> sturm_sequence(const IntPoly& f) {
  std::vector<IntPoly> seq{f, f.derivative()};
  while (seq.back().degree() > 0) {
    IntPoly r = positive_remainder(seq[seq.size() - 2], seq.back());
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

std::size_t sturm_count(const std::vector<IntPoly>& seq, const BigRat& a, const BigRat& b) {
  const int va = variations(seq, a);
  const int vb = variations(seq, b);
  return static_cast<std::size_t>(std::max(0, va - vb));
}

std::vector<RealRoot> real_roots_in(const IntPoly& p, const BigRat& lo, const BigRat& hi,
                                    double tol) {
  if (p.is_zero()) throw InvalidInput("real roots of the zero polynomial");
  if (hi < lo) throw InvalidInput("real_roots_in: empty interval");
  if (!(tol > 0.0)) throw InvalidInput("real_roots_in: tolerance must be positive");
  const BigRat width = rational_from(tol);
  std::vector<RealRoot> out;
  for (const auto& [f, multiplicity] : square_free_decomposition(p)) {
    if (sign_at(f, lo) == 0) out.push_back({lo, lo, lo.get_d(), multiplicity, true});
    if (lo == hi) continue;
    const auto seq = sturm_sequence(f);
    isolate(f, seq, lo, hi, sturm_count(seq, lo, hi), width, multiplicity, out);
  }
  std::sort(out.begin(), out.end(), [](const RealRoot& x, const RealRoot& y) { return x.lo < y.lo; });
  return out;
}

std::vector<RealRoot> real_roots(const IntPoly& p, double tol) {
  if (p.is_zero()) throw InvalidInput("real roots of the zero polynomial");
  // Cauchy: every root satisfies |x| <= 1 + max |a_k / a_n|.
  BigRat bound = 0;
  const BigRat lead = abs(p.leading());
  for (const auto& c : p.coefficients()) {
    const BigRat ratio = BigRat(abs(c)) / lead;
    if (ratio > bound) bound = ratio;
  }
  bound += 1;
  return real_roots_in(p, -bound, bound, tol);
}

}  // namespace qgc
