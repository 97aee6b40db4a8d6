#include "qgc/sturm_liouville.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qgc/charfun.hpp"
#include "qgc/error.hpp"

namespace qgc {
namespace {

using cplx = std::complex<double>;

bool mirror_symmetric(const std::vector<double>& v) {
  for (std::size_t k = 0; k < v.size() / 2; ++k) {
    if (std::abs(v[k] - v[v.size() - 1 - k]) > 1e-9) return false;
  }
  return true;
}

// Extended precision inside the integrator keeps the Wronskian drift at the
// rounding floor of the double-precision outputs even when the solutions
// grow to 1e4 and beyond.
using xcplx = std::complex<long double>;

struct State {
  xcplx y, dy;
};

cplx power(cplx x, long n) {
  cplx r = 1.0;
  for (long k = 0; k < n; ++k) r *= x;
  return r;
}

}  // namespace

double PotentialSample::at(double x) const {
  const std::size_t n = values.size() - 1;
  const double t = std::clamp(x / ell, 0.0, 1.0) * static_cast<double>(n);
  const std::size_t k = std::min(static_cast<std::size_t>(t), n - 1);
  const double w = t - static_cast<double>(k);
  return (1.0 - w) * values[k] + w * values[k + 1];
}

PotentialSample make_potential(double ell, std::vector<double> values, bool symmetric, bool edge_independent) {
  if (!(ell > 0.0) || !std::isfinite(ell)) throw InvalidInput("potential: edge length must be positive");
  if (values.size() < 2) throw InvalidInput("potential: need at least two samples");
  for (double v : values) {
    if (!std::isfinite(v)) throw InvalidInput("potential: non-finite sample");
  }
  if (symmetric && !mirror_symmetric(values)) {
    throw InvalidInput("potential: flagged symmetric but q(l - x) != q(x)");
  }
  return {ell, std::move(values), symmetric, edge_independent};
}

PotentialSample constant_potential(double v0, double ell) { return make_potential(ell, {v0, v0}, true); }

PotentialSample sample_potential(const std::function<double(double)>& f, double ell, std::size_t n) {
  if (n < 1) throw InvalidInput("potential: need at least one interval");
  std::vector<double> v(n + 1);
  for (std::size_t k = 0; k <= n; ++k) v[k] = f(ell * static_cast<double>(k) / static_cast<double>(n));
  const bool sym = mirror_symmetric(v);
  return make_potential(ell, std::move(v), sym);
}

PotentialSample read_potential_csv(std::istream& in) {
  std::vector<double> xs;
  std::vector<double> qs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::istringstream row(line);
    std::string a;
    std::string b;
    if (!std::getline(row, a, ',') || !std::getline(row, b)) {
      throw InvalidInput("potential CSV line " + std::to_string(line_no) + ": expected x,q");
    }
    try {
      std::size_t used_a = 0;
      std::size_t used_b = 0;
      const double x = std::stod(a, &used_a);
      const double q = std::stod(b, &used_b);
      xs.push_back(x);
      qs.push_back(q);
    } catch (const std::logic_error&) {
      if (xs.empty() && line_no == 1) continue;  // header
      throw InvalidInput("potential CSV line " + std::to_string(line_no) + ": not numeric");
    }
  }
  if (xs.size() < 2) throw InvalidInput("potential CSV: need at least two rows");
  if (std::abs(xs.front()) > 1e-12) throw InvalidInput("potential CSV: grid must start at x = 0");
  const double ell = xs.back();
  if (!(ell > 0.0)) throw InvalidInput("potential CSV: grid must be increasing");
  const double h = ell / static_cast<double>(xs.size() - 1);
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (std::abs(xs[k] - h * static_cast<double>(k)) > 1e-9 * std::max(1.0, ell)) {
      throw InvalidInput("potential CSV: grid is not uniform at row " + std::to_string(k + 1));
    }
  }
  const bool sym = mirror_symmetric(qs);
  return make_potential(ell, std::move(qs), sym);
}

PotentialSample load_potential_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open potential file '" + path + "'");
  return read_potential_csv(in);
}

Fundamental integrate_sc(const PotentialSample& q, cplx lambda, int steps) {
  if (steps < 64) throw InvalidInput("integrate_sc needs at least 64 steps");
  const long double h = static_cast<long double>(q.ell) / steps;
  const xcplx lam(lambda.real(), lambda.imag());
  // Both solutions share the coefficient q(x) - lambda.
  auto rhs = [&](long double x, const State& st) {
    return State{st.dy, (static_cast<long double>(q.at(static_cast<double>(x))) - lam) * st.y};
  };
  auto advance = [&](long double x, State st) {
    const State k1 = rhs(x, st);
    const State k2 = rhs(x + h / 2, {st.y + h / 2 * k1.y, st.dy + h / 2 * k1.dy});
    const State k3 = rhs(x + h / 2, {st.y + h / 2 * k2.y, st.dy + h / 2 * k2.dy});
    const State k4 = rhs(x + h, {st.y + h * k3.y, st.dy + h * k3.dy});
    return State{st.y + h / 6 * (k1.y + 2.0L * k2.y + 2.0L * k3.y + k4.y),
                 st.dy + h / 6 * (k1.dy + 2.0L * k2.dy + 2.0L * k3.dy + k4.dy)};
  };
  State s{0.0L, 1.0L};
  State c{1.0L, 0.0L};
  for (int k = 0; k < steps; ++k) {
    const long double x = static_cast<long double>(q.ell) * k / steps;
    s = advance(x, s);
    c = advance(x, c);
  }
  const auto narrow = [](xcplx v) { return cplx(static_cast<double>(v.real()), static_cast<double>(v.imag())); };
  for (cplx v : {narrow(s.y), narrow(s.dy), narrow(c.y), narrow(c.dy)}) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw NumericError("integrate_sc: overflow at lambda = " + std::to_string(lambda.real()));
    }
  }
  return {narrow(s.y), narrow(s.dy), narrow(c.y), narrow(c.dy)};
}

cplx phi_eval_numeric(const CombGraph& g, const VertexSet& vstar, const PotentialSample& q, cplx lambda,
                      int steps) {
  if (!q.symmetric || !q.edge_independent) {
    throw InvalidInput("phi_eval_numeric needs a symmetric, edge-independent potential");
  }
  const long exponent = static_cast<long>(g.edge_count()) - static_cast<long>(g.vertex_count()) +
                        static_cast<long>(vstar.size());
  const IntPoly p = disc_char_poly(g, vstar);
  const Fundamental f = integrate_sc(q, lambda, steps);
  if (exponent >= 0) return power(f.s, exponent) * eval(p, f.c);
  // Trees: P(z) carries z^2 - 1, and for a symmetric potential c s' = c^2,
  // so the Wronskian turns (c^2 - 1) / s into c'. No division by s needed.
  const IntPoly unit_pair{-1, 0, 1};
  if (exponent == -1 && pseudo_remainder(p, unit_pair).is_zero()) return f.cp * eval(exact_div(p, unit_pair), f.c);
  if (std::abs(f.s) < 1e-14) throw NumericError("phi_eval_numeric: s(l) = 0 with a negative exponent");
  return eval(p, f.c) / power(f.s, -exponent);
}

cplx s_eval_numeric(const CombGraph& g, Vertex lead, const PotentialSample& q, double lambda, int steps) {
  if (!(lambda > 0.0)) throw InvalidInput("s_eval_numeric needs lambda > 0");
  const cplx n = phi_eval_numeric(g, {}, q, lambda, steps);
  const cplx iwd = cplx(0.0, std::sqrt(lambda)) * phi_eval_numeric(g, VertexSet{lead}, q, lambda, steps);
  const cplx denominator = n - iwd;
  if (std::abs(denominator) < 1e-300) throw NumericError("s_eval_numeric: pole of S");
  return (n + iwd) / denominator;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t k = 0; k < std::min(x.size(), y.size()); ++k) {
    if (x[k] > 0.0 && y[k] > 0.0) {
      lx.push_back(std::log(x[k]));
      ly.push_back(std::log(y[k]));
    }
  }
  if (lx.size() < 2) return 0.0;
  const double n = static_cast<double>(lx.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t k = 0; k < lx.size(); ++k) {
    mx += lx[k] / n;
    my += ly[k] / n;
  }
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t k = 0; k < lx.size(); ++k) {
    sxy += (lx[k] - mx) * (ly[k] - my);
    sxx += (lx[k] - mx) * (lx[k] - mx);
  }
  return sxx > 0.0 ? sxy / sxx : 0.0;
}

AsymptoticReport asymptotic_check(const PotentialSample& q, const std::vector<double>& lambdas,
                                  const CombGraph* graph, Vertex lead) {
  AsymptoticReport report;
  const PotentialSample free = constant_potential(0.0, q.ell);
  for (double lambda : lambdas) {
    if (!(lambda > 0.0)) throw InvalidInput("asymptotic_check needs positive lambdas");
    const double omega = std::sqrt(lambda);
    const int steps = std::max(kDefaultSteps, static_cast<int>(std::ceil(400.0 * omega * q.ell)));
    const Fundamental fq = integrate_sc(q, lambda, steps);
    AsymptoticRow row;
    row.lambda = lambda;
    row.err_s = std::abs(fq.s - std::sin(omega * q.ell) / omega);
    row.err_c = std::abs(fq.c - std::cos(omega * q.ell));
    if (graph != nullptr) {
      row.err_S = std::abs(s_eval_numeric(*graph, lead, q, lambda, steps) -
                           s_eval_numeric(*graph, lead, free, lambda, steps));
    }
    report.rows.push_back(row);
  }
  std::vector<double> x;
  std::vector<double> es;
  std::vector<double> ec;
  std::vector<double> eS;
  for (const auto& r : report.rows) {
    x.push_back(r.lambda);
    es.push_back(r.err_s);
    ec.push_back(r.err_c);
    eS.push_back(r.err_S);
  }
  report.slope_s = loglog_slope(x, es);
  report.slope_c = loglog_slope(x, ec);
  if (graph != nullptr) {
    report.slope_S = loglog_slope(x, eS);
    report.S_decreasing = std::is_sorted(eS.begin(), eS.end(), std::greater<>()) &&
                          std::adjacent_find(eS.begin(), eS.end()) == eS.end();
  }
  return report;
}

}  // namespace qgc
