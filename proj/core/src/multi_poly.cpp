#include "qgc/multi_poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qgc/error.hpp"

namespace qgc {
namespace {

constexpr unsigned kFieldBits = 21;
constexpr std::uint64_t kFieldMask = (std::uint64_t{1} << kFieldBits) - 1;

bool divides(MultiPoly::Key small, MultiPoly::Key big) {
  const Exponents a = MultiPoly::unpack(small);
  const Exponents b = MultiPoly::unpack(big);
  return a.c <= b.c && a.s <= b.s && a.lambda <= b.lambda;
}

void sort_descending(std::vector<MultiPoly::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const MultiPoly::Term& x, const MultiPoly::Term& y) { return x.first > y.first; });
}

}  // namespace

MultiPoly::MultiPoly(long constant) {
  if (constant != 0) terms_.emplace_back(0, BigInt(constant));
}

MultiPoly::Key MultiPoly::pack(Exponents e) {
  if (e.c > kFieldMask || e.s > kFieldMask || e.lambda > kFieldMask) {
    throw InvalidInput("MultiPoly exponent overflow");
  }
  return (Key{e.c} << (2 * kFieldBits)) | (Key{e.s} << kFieldBits) | Key{e.lambda};
}

Exponents MultiPoly::unpack(Key k) {
  return {static_cast<unsigned>(k >> (2 * kFieldBits) & kFieldMask),
          static_cast<unsigned>(k >> kFieldBits & kFieldMask), static_cast<unsigned>(k & kFieldMask)};
}

MultiPoly MultiPoly::term(BigInt coeff, Exponents e) {
  MultiPoly p;
  if (coeff != 0) p.terms_.emplace_back(pack(e), std::move(coeff));
  return p;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [key, coeff] : terms_) {
    const Exponents e = unpack(key);
    d = std::max(d, e.c + e.s + e.lambda);
  }
  return d;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  sort_descending(terms);
  MultiPoly out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().first == t.first) {
      out.terms_.back().second += t.second;
      if (out.terms_.back().second == 0) out.terms_.pop_back();
    } else if (t.second != 0) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  auto& ts = out.terms_;
  ts.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first > b.terms_[j].first)) {
      ts.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || b.terms_[j].first > a.terms_[i].first) {
      ts.push_back(b.terms_[j++]);
    } else {
      BigInt sum = a.terms_[i].second + b.terms_[j].second;
      if (sum != 0) ts.emplace_back(a.terms_[i].first, std::move(sum));
      ++i;
      ++j;
    }
  }
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<MultiPoly::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      // Fields never carry into each other for the degrees used here.
      terms.emplace_back(ka + kb, ca * cb);
    }
  }
  return MultiPoly::from_terms(std::move(terms));
}

MultiPoly exact_div(const MultiPoly& a, const MultiPoly& d) {
  if (d.is_zero()) throw InvalidInput("MultiPoly division by zero");
  if (d.term_count() == 1 && d.terms().front().first == 0) {
    const BigInt& k = d.terms().front().second;
    std::vector<MultiPoly::Term> out = a.terms();
    for (auto& [key, coeff] : out) {
      if (!mpz_divisible_p(coeff.get_mpz_t(), k.get_mpz_t())) {
        throw StructuralError("MultiPoly exact_div: inexact scalar division");
      }
      mpz_divexact(coeff.get_mpz_t(), coeff.get_mpz_t(), k.get_mpz_t());
    }
    return MultiPoly::from_terms(std::move(out));
  }
  const auto& [dk, dc] = d.terms().front();
  // Ordered remainder keyed by monomial (descending).
  std::map<MultiPoly::Key, BigInt, std::greater<>> rem;
  for (const auto& [k, c] : a.terms()) rem.emplace(k, c);
  std::vector<MultiPoly::Term> quotient;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!divides(dk, top->first) || !mpz_divisible_p(top->second.get_mpz_t(), dc.get_mpz_t())) {
      throw StructuralError("MultiPoly exact_div: divisor does not divide dividend");
    }
    const MultiPoly::Key qk = top->first - dk;
    BigInt qc;
    mpz_divexact(qc.get_mpz_t(), top->second.get_mpz_t(), dc.get_mpz_t());
    for (const auto& [k, c] : d.terms()) {
      auto [it, fresh] = rem.try_emplace(qk + k, 0);
      mpz_submul(it->second.get_mpz_t(), qc.get_mpz_t(), c.get_mpz_t());
      if (it->second == 0) rem.erase(it);
    }
    quotient.emplace_back(qk, std::move(qc));
  }
  return MultiPoly::from_terms(std::move(quotient));
}

MultiPoly multi_det(MultiMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) throw InvalidInput("determinant of a 0x0 matrix");
  for (const auto& row : m) {
    if (row.size() != n) throw InvalidInput("determinant of a non-square matrix");
  }
  int sign = 1;
  MultiPoly previous = 1;
  for (std::size_t k = 0; k < n; ++k) {
    // Sparsest nonzero pivot in the trailing block, ties broken by degree.
    std::size_t pr = n;
    std::size_t pc = n;
    std::pair<std::size_t, unsigned> best{~std::size_t{0}, ~0U};
    for (std::size_t i = k; i < n; ++i) {
      for (std::size_t j = k; j < n; ++j) {
        if (m[i][j].is_zero()) continue;
        const std::pair<std::size_t, unsigned> score{m[i][j].term_count(), m[i][j].total_degree()};
        if (score < best) {
          best = score;
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == n) return {};
    if (pr != k) {
      std::swap(m[pr], m[k]);
      sign = -sign;
    }
    if (pc != k) {
      for (auto& row : m) std::swap(row[pc], row[k]);
      sign = -sign;
    }
    if (k + 1 == n) break;
    const MultiPoly& pivot = m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const bool lead_zero = m[i][k].is_zero();
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly value = m[i][j] * pivot;
        if (!lead_zero && !m[k][j].is_zero()) value = value - m[i][k] * m[k][j];
        m[i][j] = exact_div(value, previous);
      }
      m[i][k] = MultiPoly();
    }
    previous = pivot;
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

MultiPoly cofactor_det(const MultiMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw InvalidInput("determinant of a 0x0 matrix");
  if (n == 1) return m[0][0];
  MultiPoly total;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    MultiMatrix minor(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (j != col) minor[i - 1].push_back(m[i][j]);
      }
    }
    MultiPoly term = m[0][col] * cofactor_det(minor);
    total = (col % 2 == 0) ? total + term : total - term;
  }
  return total;
}

MultiPoly reduce_relation(const MultiPoly& p) {
  // Each step lowers the lambda degree of a term, so this terminates; the
  // single relation is a Groebner basis of its ideal, so the result does
  // not depend on the order in which terms are rewritten.
  std::map<MultiPoly::Key, BigInt> done;
  std::vector<MultiPoly::Term> work(p.terms().begin(), p.terms().end());
  while (!work.empty()) {
    auto [key, coeff] = std::move(work.back());
    work.pop_back();
    Exponents e = MultiPoly::unpack(key);
    if (e.s >= 2 && e.lambda >= 1) {
      // lambda s^2 -> 1 - c^2
      e.s -= 2;
      e.lambda -= 1;
      work.emplace_back(MultiPoly::pack(e), coeff);
      e.c += 2;
      work.emplace_back(MultiPoly::pack(e), -coeff);
      continue;
    }
    auto [it, fresh] = done.try_emplace(key, 0);
    it->second += coeff;
  }
  return MultiPoly::from_terms(std::vector<MultiPoly::Term>(done.begin(), done.end()));
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, coeff] : p.terms()) {
    const Exponents e = MultiPoly::unpack(key);
    os << (first ? (coeff < 0 ? "-" : "") : (coeff < 0 ? " - " : " + "));
    first = false;
    const BigInt mag = abs(coeff);
    const bool bare = e.c == 0 && e.s == 0 && e.lambda == 0;
    if (mag != 1 || bare) os << mag.get_str() << (bare ? "" : "*");
    bool need_star = false;
    auto emit = [&](const char* name, unsigned power) {
      if (power == 0) return;
      if (need_star) os << "*";
      os << name;
      if (power > 1) os << "^" << power;
      need_star = true;
    };
    emit("c", e.c);
    emit("s", e.s);
    emit("lambda", e.lambda);
  }
  return os.str();
}

}  // namespace qgc
