#include "qgc/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qgc/aberth.hpp"
#include "qgc/charfun.hpp"
#include "qgc/error.hpp"
#include "qgc/real_roots.hpp"

namespace qgc {
namespace {

using cplx = std::complex<double>;

cplx ipow(cplx x, int n) {
  cplx r = 1.0;
  const cplx base = n < 0 ? 1.0 / x : x;
  for (int k = 0; k < std::abs(n); ++k) r *= base;
  return r;
}

int mod4(int k) { return ((k % 4) + 4) % 4; }

BigRat half_power(int m) {
  BigRat r = 1;
  for (int k = 0; k < m; ++k) r /= 2;
  return r;
}

void check_pair(const TrigForm& phiN, const TrigForm& phiD) {
  if (std::abs(phiN.m - phiD.m) != 1 || 2 * phiN.a - phiN.m != 1 + 2 * phiD.a - phiD.m) {
    throw StructuralError("jost_form: exponents (a_N, m_N) = (" + std::to_string(phiN.a) + ", " +
                          std::to_string(phiN.m) + ") and (a_D, m_D) = (" + std::to_string(phiD.a) +
                          ", " + std::to_string(phiD.m) + ") do not describe a single lead");
  }
}

}  // namespace

JostLaurent jost_form(const TrigForm& phiN, const TrigForm& phiD, double ell) {
  if (!(ell > 0.0)) throw InvalidInput("edge length must be positive");
  check_pair(phiN, phiD);
  // phi = scale * omega^(2a - m) * sigma^m * Q(gamma), sigma = sin(omega l)
  // = (u - 1/u) / 2i, gamma = cos(omega l) = (u + 1/u) / 2.
  const LaurentPoly diff(-1, {BigRat(-1), BigRat(0), BigRat(1)});  // u - 1/u
  const LaurentPoly half_diff = BigRat(1, 2) * diff;
  const LaurentPoly qn = phiN.scale * LaurentPoly::substitute_gamma(phiN.Q);
  const LaurentPoly qd = phiD.scale * LaurentPoly::substitute_gamma(phiD.Q);
  JostLaurent out;
  out.ell = ell;
  out.e = -(2 * phiN.a - phiN.m);
  if (phiD.m == phiN.m + 1) {
    out.F = half_power(phiN.m) * (pow(diff, static_cast<unsigned>(phiN.m)) * (qn + half_diff * qd));
    out.unit_power_of_i = mod4(-phiN.m);
  } else {
    out.F = half_power(phiD.m) * (pow(diff, static_cast<unsigned>(phiD.m)) * (qd - half_diff * qn));
    out.unit_power_of_i = mod4(1 - phiD.m);
  }
  if (out.F.is_zero()) throw StructuralError("jost_form: Jost function vanishes identically");
  return out;
}

JostLaurent jost_for_lead(const CombGraph& g, Vertex lead, double ell) {
  if (lead >= g.vertex_count()) throw InvalidInput("lead vertex " + std::to_string(lead) + " out of range");
  return jost_form(phi_neumann(g), phi_dirichlet(g, VertexSet{lead}), ell);
}

cplx jost_eval(const JostLaurent& j, cplx omega) {
  const cplx u = std::exp(cplx(0.0, 1.0) * omega * j.ell);
  return ipow(cplx(0.0, 1.0), j.unit_power_of_i) * ipow(omega, -j.e) * j.F.eval(u);
}

ResonanceSet resonances(const JostLaurent& j, double tol) {
  if (j.F.is_zero()) throw InvalidInput("resonances of a zero Jost function");
  ResonanceSet out;
  out.ell = j.ell;
  out.period = 2.0 * std::numbers::pi / j.ell;
  const IntPoly cleared = j.F.cleared();
  AberthOptions opts;
  opts.tol = tol;
  for (const auto& [factor, multiplicity] : square_free_decomposition(cleared)) {
    for (const cplx& root : aberth_roots(factor, opts)) {
      if (std::abs(root) < 1e-300) continue;
      const cplx u = 1.0 / root;  // pole of S: zero of E(-omega)
      double phase = std::arg(u);
      if (phase <= -std::numbers::pi) phase = std::numbers::pi;
      const cplx omega(phase / j.ell, -std::log(std::abs(u)) / j.ell);
      out.roots.push_back({omega, u, multiplicity});
    }
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const Resonance& x, const Resonance& y) {
    // Real parts that agree to rounding (a real root and the resonance below
    // it) are ordered by imaginary part.
    if (std::abs(x.omega.real() - y.omega.real()) > 1e-9) return x.omega.real() < y.omega.real();
    return x.omega.imag() < y.omega.imag();
  });
  return out;
}

cplx s_eval(const TrigForm& phiN, const TrigForm& phiD, double ell, double lambda) {
  if (!(lambda > 0.0)) throw InvalidInput("s_eval needs lambda > 0");
  if (!(ell > 0.0)) throw InvalidInput("edge length must be positive");
  // Cancel lambda^min(a) s^min(m) gcd(Q_N, Q_D) before evaluating.
  const IntPoly g = poly_gcd(phiN.Q, phiD.Q);
  TrigForm n = phiN;
  TrigForm d = phiD;
  n.Q = exact_div(phiN.Q, g);
  d.Q = exact_div(phiD.Q, g);
  const int a0 = std::min(n.a, d.a);
  const int m0 = std::min(n.m, d.m);
  n.a -= a0;
  d.a -= a0;
  n.m -= m0;
  d.m -= m0;
  const double omega = std::sqrt(lambda);
  const cplx A = trig_eval(n, omega, ell);
  const cplx iwB = cplx(0.0, omega) * trig_eval(d, omega, ell);
  const cplx denominator = A - iwB;
  if (std::abs(denominator) < 1e-300) throw NumericError("s_eval: pole of S at lambda = " + std::to_string(lambda));
  return (A + iwB) / denominator;
}

CommonRoot classify_common_root(double rho, double ell) {
  if (rho > 1.0) {
    const double x = std::acosh(rho) / ell;
    return {CommonRootKind::bound, -x * x};
  }
  if (rho >= -1.0) {
    const double x = std::acos(rho) / ell;
    return {CommonRootKind::embedded, x * x};
  }
  return {CommonRootKind::none, 0.0};
}

EmbeddedEigenvalues embedded_eigenvalues(const TrigForm& phiN, const TrigForm& phiD, double ell,
                                         double lambda_max) {
  if (!(ell > 0.0)) throw InvalidInput("edge length must be positive");
  EmbeddedEigenvalues out;
  out.sin_family = phiN.m > 0 && phiD.m > 0;
  SpectrumFamilies fam;
  fam.sin_family = out.sin_family;
  const IntPoly g = poly_gcd(phiN.Q, phiD.Q);
  if (g.degree() > 0) {
    for (const RealRoot& r : real_roots_in(g, BigRat(-1), BigRat(1))) {
      out.gcd_roots.push_back(r.value);
      fam.cos_roots.push_back({r.value, r.multiplicity});
    }
  }
  for (double v : eigenvalues_below(fam, ell, lambda_max)) {
    if (v > 0.0) out.values.push_back(v);
  }
  return out;
}

std::vector<double> bound_states(const TrigForm& phiN, const TrigForm& phiD, double ell) {
  if (!(ell > 0.0)) throw InvalidInput("edge length must be positive");
  std::vector<double> out;
  const IntPoly g = poly_gcd(phiN.Q, phiD.Q);
  if (g.degree() <= 0) return out;
  for (const RealRoot& r : real_roots(g)) {
    if (r.lo <= 1) continue;
    out.push_back(classify_common_root(r.value, ell).lambda);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qgc
