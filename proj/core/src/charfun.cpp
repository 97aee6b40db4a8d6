#include "qgc/charfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qgc/error.hpp"
#include "qgc/real_roots.hpp"

namespace qgc {
namespace {

void require_connected(const CombGraph& g) {
  if (g.edge_count() == 0) throw InvalidInput("graph has no edges");
  if (!is_connected(g)) throw InvalidInput("graph is not connected");
}

// Bareiss over Z[z].
IntPoly poly_det(std::vector<std::vector<IntPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPoly::constant(1);
  int sign = 1;
  IntPoly previous = IntPoly::constant(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = n;
    for (std::size_t i = k; i < n; ++i) {
      if (!m[i][k].is_zero() && (pr == n || m[i][k].degree() < m[pr][k].degree())) pr = i;
    }
    if (pr == n) return {};
    if (pr != k) {
      std::swap(m[pr], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], previous);
      }
      m[i][k] = IntPoly();
    }
    previous = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

IntPoly disc_char_poly(const CombGraph& g, const VertexSet& vstar) {
  const InteriorSubgraph inner = interior_subgraph(g, vstar);
  const std::size_t n = inner.graph.vertex_count();
  std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = IntPoly::monomial(static_cast<unsigned long>(inner.degrees_in_parent[i]), 1);
  }
  for (const auto& [u, v] : inner.graph.edges()) {
    m[u][v] = IntPoly::constant(-1);
    m[v][u] = IntPoly::constant(-1);
  }
  return poly_det(std::move(m));
}

TrigForm phi_neumann(const CombGraph& g) {
  require_connected(g);
  const int exponent = static_cast<int>(g.edge_count()) - static_cast<int>(g.vertex_count());
  return trig_canonicalize(0, exponent, disc_char_poly(g));
}

TrigForm phi_dirichlet(const CombGraph& g, const VertexSet& vstar) {
  require_connected(g);
  if (vstar.empty()) throw InvalidInput("Dirichlet problem needs a nonempty vertex set");
  const int exponent = static_cast<int>(g.edge_count()) - static_cast<int>(g.vertex_count()) +
                       static_cast<int>(vstar.size());
  return trig_canonicalize(0, exponent, disc_char_poly(g, vstar));
}

MultiMatrix char_matrix(const CombGraph& g, const VertexSet& vstar) {
  require_connected(g);
  const std::size_t n = g.vertex_count();
  for (Vertex v : vstar.members()) {
    if (v >= n) throw InvalidInput("Dirichlet vertex " + std::to_string(v) + " out of range");
  }
  const auto& edges = g.edges();
  const std::size_t dim = 2 * edges.size();
  const MultiPoly s = MultiPoly::s();
  const MultiPoly c = MultiPoly::c();
  const MultiPoly lambda_s = MultiPoly::term(1, {0, 1, 1});

  // Coefficients of y_e and y_e' at the end of edge e lying on v.
  struct EndRow {
    MultiPoly value_a, value_b, deriv_a, deriv_b;
  };
  auto end_at = [&](std::size_t e, Vertex v) {
    if (edges[e].first == v) return EndRow{MultiPoly(), 1, 1, MultiPoly()};  // x = 0
    return EndRow{s, c, c, -lambda_s};                                      // x = l
  };

  MultiMatrix m;
  m.reserve(dim);
  auto blank = [&] { return std::vector<MultiPoly>(dim); };
  for (Vertex v = 0; v < n; ++v) {
    std::vector<std::size_t> incident;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (edges[e].first == v || edges[e].second == v) incident.push_back(e);
    }
    if (vstar.contains(v)) {
      for (std::size_t e : incident) {
        auto row = blank();
        const EndRow r = end_at(e, v);
        row[2 * e] = r.value_a;
        row[2 * e + 1] = r.value_b;
        m.push_back(std::move(row));
      }
      continue;
    }
    const std::size_t first = incident.front();
    const EndRow r0 = end_at(first, v);
    for (std::size_t k = 1; k < incident.size(); ++k) {
      auto row = blank();
      const std::size_t e = incident[k];
      const EndRow r = end_at(e, v);
      row[2 * first] = r0.value_a;
      row[2 * first + 1] = r0.value_b;
      row[2 * e] = -r.value_a;
      row[2 * e + 1] = -r.value_b;
      m.push_back(std::move(row));
    }
    // Incoming derivatives (x = l) minus outgoing ones (x = 0).
    auto row = blank();
    for (std::size_t e : incident) {
      const EndRow r = end_at(e, v);
      const bool outgoing = edges[e].first == v;
      row[2 * e] = outgoing ? -r.deriv_a : r.deriv_a;
      row[2 * e + 1] = outgoing ? -r.deriv_b : r.deriv_b;
    }
    m.push_back(std::move(row));
  }
  return m;
}

TrigForm trig_from_reduced(const MultiPoly& reduced) {
  if (reduced.is_zero()) throw StructuralError("characteristic determinant vanishes identically");
  const Exponents first = MultiPoly::unpack(reduced.terms().front().first);
  std::vector<BigInt> q;
  for (const auto& [key, coeff] : reduced.terms()) {
    const Exponents e = MultiPoly::unpack(key);
    if (e.s != first.s || e.lambda != first.lambda) {
      throw StructuralError("reduced determinant " + to_string(reduced) +
                            " is not of the form lambda^a s^m Q(c)");
    }
    if (q.size() <= e.c) q.resize(e.c + 1, 0);
    q[e.c] = coeff;
  }
  return trig_canonicalize(static_cast<int>(first.lambda), static_cast<int>(first.s),
                           IntPoly(std::move(q)));
}

TrigForm char_matrix_oracle(const CombGraph& g, const VertexSet& vstar) {
  if (g.edge_count() > 21) throw InvalidInput("char_matrix_oracle supports at most 21 edges");
  return trig_from_reduced(reduce_relation(multi_det(char_matrix(g, vstar))));
}

SpectrumFamilies spectrum_families(const TrigForm& f, double lambda_max, double ell) {
  if (!(ell > 0.0)) throw InvalidInput("edge length must be positive");
  if (f.Q.is_zero()) throw InvalidInput("spectrum of the zero function");
  SpectrumFamilies out;
  out.ell = ell;
  out.lambda_max = lambda_max;
  out.sin_family = f.m > 0;
  out.has_zero = f.a > 0 || sign_at(f.Q, BigRat(1)) == 0;
  for (const RealRoot& r : real_roots(f.Q)) {
    const bool inside = r.hi >= -1 && r.lo <= 1;
    const double rho = std::clamp(r.value, inside ? -1.0 : -HUGE_VAL, inside ? 1.0 : HUGE_VAL);
    (inside ? out.cos_roots : out.anomalies).push_back({rho, r.multiplicity});
  }
  if (lambda_max > 0.0) out.eigenvalues = eigenvalues_below(out, ell, lambda_max);
  return out;
}

std::vector<double> eigenvalues_below(const SpectrumFamilies& fam, double ell, double lambda_max) {
  constexpr double pi = std::numbers::pi;
  const double omega_max = std::sqrt(std::max(lambda_max, 0.0)) * ell;  // in units of omega*l
  std::vector<double> phases;  // omega * l >= 0
  if (fam.has_zero) phases.push_back(0.0);
  if (fam.sin_family) {
    for (int k = 1; k * pi <= omega_max + 1e-12; ++k) phases.push_back(k * pi);
  }
  for (const CosRoot& r : fam.cos_roots) {
    const double theta = std::acos(std::clamp(r.rho, -1.0, 1.0));
    for (int k = 0; 2 * pi * k - theta <= omega_max + 1e-12; ++k) {
      if (k > 0) phases.push_back(2 * pi * k - theta);
      phases.push_back(2 * pi * k + theta);
    }
  }
  std::vector<double> out;
  for (double x : phases) {
    const double lambda = (x / ell) * (x / ell);
    if (lambda <= lambda_max * (1 + 1e-12)) out.push_back(lambda);
  }
  std::sort(out.begin(), out.end());
  std::vector<double> distinct;
  for (double v : out) {
    if (distinct.empty() || v - distinct.back() > 1e-9 * std::max(1.0, v)) distinct.push_back(v);
  }
  return distinct;
}

bool interlace(const std::vector<double>& mu, const std::vector<double>& nu, double tol) {
  auto between = [tol](const std::vector<double>& xs, double lo, double hi) {
    return std::any_of(xs.begin(), xs.end(), [&](double x) { return x >= lo - tol && x <= hi + tol; });
  };
  auto separated = [&](const std::vector<double>& a, const std::vector<double>& b) {
    for (std::size_t k = 0; k + 1 < a.size(); ++k) {
      if (!between(b, a[k], a[k + 1])) return false;
    }
    return true;
  };
  if (mu.empty() || nu.empty()) return mu.size() <= 1 && nu.size() <= 1;
  if (mu.front() > nu.front() + tol) return false;
  return separated(mu, nu) && separated(nu, mu);
}

}  // namespace qgc
