#include "qgc/trig_form.hpp"

#include <sstream>

#include "qgc/error.hpp"

namespace qgc {

TrigForm trig_canonicalize(int a, int m, const IntPoly& Q) {
  if (Q.is_zero()) throw InvalidInput("trig_canonicalize: Q must be nonzero");
  if (a < 0) throw InvalidInput("trig_canonicalize: negative lambda exponent");
  const IntPoly z2_minus_1{-1, 0, 1};
  const IntPoly one_minus_z2{1, 0, -1};
  IntPoly q = Q;
  // s^-1 (c^2 - 1) = -lambda s
  while (m < 0) {
    q = -exact_div(q, z2_minus_1);
    m += 2;
    a += 1;
  }
  // lambda s^2 = 1 - c^2
  while (a > 0 && m >= 2) {
    q = one_minus_z2 * q;
    a -= 1;
    m -= 2;
  }
  const ContentSplit split = content_primitive(q);
  TrigForm out;
  out.a = a;
  out.m = m;
  out.Q = split.primitive;
  out.scale = BigRat(split.content) * split.sign;
  return out;
}

bool trig_equal(const TrigForm& f, const TrigForm& g) {
  return f.a == g.a && f.m == g.m && f.Q == g.Q;
}

bool trig_less(const TrigForm& f, const TrigForm& g) {
  if (f.a != g.a) return f.a < g.a;
  if (f.m != g.m) return f.m < g.m;
  const auto& x = f.Q.coefficients();
  const auto& y = g.Q.coefficients();
  if (x.size() != y.size()) return x.size() < y.size();
  for (std::size_t k = x.size(); k-- > 0;) {
    if (x[k] != y[k]) return x[k] < y[k];
  }
  return false;
}

namespace {

std::complex<double> ipow(std::complex<double> x, int n) {
  std::complex<double> r = 1.0;
  for (int k = 0; k < n; ++k) r *= x;
  return r;
}

}  // namespace

std::complex<double> trig_eval_unscaled(const TrigForm& f, std::complex<double> omega, double ell) {
  const std::complex<double> lambda = omega * omega;
  const std::complex<double> x = omega * ell;
  // sin(x)/omega loses accuracy near 0; switch to its series there.
  const std::complex<double> s =
      std::abs(x) < 1e-6 ? ell * (1.0 - x * x / 6.0) : std::sin(x) / omega;
  return ipow(lambda, f.a) * ipow(s, f.m) * eval(f.Q, std::cos(x));
}

std::complex<double> trig_eval(const TrigForm& f, std::complex<double> omega, double ell) {
  return f.scale.get_d() * trig_eval_unscaled(f, omega, ell);
}

std::string to_string(const TrigForm& f) {
  std::ostringstream os;
  os << "lambda^" << f.a << " * s^" << f.m << " * (" << to_string(f.Q, 'c') << ")";
  return os.str();
}

}  // namespace qgc
