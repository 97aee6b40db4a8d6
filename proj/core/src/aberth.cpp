#include "qgc/aberth.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "qgc/error.hpp"

namespace qgc {
namespace {

using cplx = std::complex<double>;
using lcplx = std::complex<long double>;

struct Evaluation {
  cplx value;
  cplx derivative;
  double magnitude;  // sum |a_k| |z|^k
};

Evaluation horner(const std::vector<double>& a, cplx z) {
  cplx p = 0.0;
  cplx dp = 0.0;
  double mag = 0.0;
  const double r = std::abs(z);
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
    mag = mag * r + std::abs(*it);
  }
  return {p, dp, mag};
}

// Newton polish in extended precision; keeps the step only if it helps.
cplx polish(const std::vector<double>& a, cplx z) {
  lcplx w(z.real(), z.imag());
  for (int it = 0; it < 3; ++it) {
    lcplx p = 0.0L;
    lcplx dp = 0.0L;
    for (auto c = a.rbegin(); c != a.rend(); ++c) {
      dp = dp * w + p;
      p = p * w + static_cast<long double>(*c);
    }
    if (std::abs(dp) == 0.0L) break;
    const lcplx next = w - p / dp;
    if (!std::isfinite(std::abs(next))) break;
    w = next;
  }
  const cplx candidate(static_cast<double>(w.real()), static_cast<double>(w.imag()));
  const Evaluation before = horner(a, z);
  const Evaluation after = horner(a, candidate);
  return std::abs(after.value) <= std::abs(before.value) ? candidate : z;
}

}  // namespace

std::vector<std::complex<double>> aberth_roots(const IntPoly& p, const AberthOptions& opts) {
  const long n = p.degree();
  if (n < 1) throw InvalidInput("aberth_roots needs a nonconstant polynomial");
  std::vector<double> a;
  a.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) a.push_back(c.get_d());
  for (double v : a) {
    if (!std::isfinite(v)) throw NumericError("aberth_roots: coefficient overflows double");
  }
  if (n == 1) return {cplx(-a[0] / a[1], 0.0)};

  // Fujiwara bound on the root moduli.
  double bound = 0.0;
  for (long k = 1; k <= n; ++k) {
    double ratio = std::abs(a[static_cast<std::size_t>(n - k)] / a[static_cast<std::size_t>(n)]);
    if (k == n) ratio /= 2.0;
    bound = std::max(bound, std::pow(ratio, 1.0 / static_cast<double>(k)));
  }
  bound *= 2.0;
  // Geometric mean of the moduli, from |a_0 / a_n|, is a better radius when
  // it is available; stay inside the bound either way.
  double radius = std::min(bound, std::max(1e-3, std::pow(std::abs(a[0] / a[static_cast<std::size_t>(n)]),
                                                          1.0 / static_cast<double>(n))));
  if (!(radius > 0.0) || !std::isfinite(radius)) radius = 1.0;

  std::mt19937 rng(opts.seed);
  std::uniform_real_distribution<double> jitter(-0.05, 0.05);
  std::vector<cplx> z(static_cast<std::size_t>(n));
  for (long k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.25) / static_cast<double>(n) +
                         jitter(rng);
    z[static_cast<std::size_t>(k)] = std::polar(radius * (1.0 + jitter(rng)), angle);
  }

  std::vector<bool> done(z.size(), false);
  double worst = HUGE_VAL;
  for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
    worst = 0.0;
    bool all_done = true;
    for (std::size_t i = 0; i < z.size(); ++i) {
      const Evaluation e = horner(a, z[i]);
      const double backward = std::abs(e.value) / std::max(e.magnitude, 1e-300);
      if (backward <= opts.tol) {
        done[i] = true;
        continue;
      }
      done[i] = false;
      all_done = false;
      worst = std::max(worst, backward);
      const cplx ratio = e.value / e.derivative;
      cplx repulsion = 0.0;
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      }
      const cplx step = ratio / (1.0 - ratio * repulsion);
      if (std::isfinite(step.real()) && std::isfinite(step.imag())) z[i] -= step;
    }
    if (all_done) {
      for (auto& root : z) root = polish(a, root);
      return z;
    }
  }
  std::ostringstream msg;
  msg << "aberth_roots: no convergence after " << opts.max_sweeps << " sweeps (worst backward error "
      << worst << ", degree " << n << ")";
  throw NumericError(msg.str());
}

}  // namespace qgc
