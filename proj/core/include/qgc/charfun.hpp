#pragma once

#include <vector>

#include "qgc/graph.hpp"
#include "qgc/int_poly.hpp"
#include "qgc/multi_poly.hpp"
#include "qgc/trig_form.hpp"

namespace qgc {

/// det(z D - A) over the vertices that survive deleting vstar, where D holds
/// degrees measured in g (not in the interior subgraph).
IntPoly disc_char_poly(const CombGraph& g, const VertexSet& vstar = {});

/// Standard conditions everywhere: canonical form of s^(E-V) P(c).
TrigForm phi_neumann(const CombGraph& g);

/// Dirichlet conditions on vstar: canonical form of s^(E-V+r) P_hat(c).
TrigForm phi_dirichlet(const CombGraph& g, const VertexSet& vstar);

/// Independent route: the 2E x 2E linear system in the edge coefficients
/// (A_e, B_e) with y_e(x) = A_e s(x) + B_e c(x). Edge {u, v}, u < v, runs
/// from u (x = 0) to v (x = l). Columns are A_0, B_0, A_1, B_1, ...; rows go
/// vertex by vertex: continuity rows (lowest incident edge against each
/// other one) then Kirchhoff, or one vanishing row per incident edge at a
/// Dirichlet vertex.
MultiMatrix char_matrix(const CombGraph& g, const VertexSet& vstar = {});

/// Splits a reduced polynomial lambda^a s^m Q(c) into its triple;
/// StructuralError if the monomials disagree on (a, m).
TrigForm trig_from_reduced(const MultiPoly& reduced);

/// det(char_matrix), reduced and canonicalized. At most 21 edges (every
/// connected graph on 7 vertices); InvalidInput beyond that.
TrigForm char_matrix_oracle(const CombGraph& g, const VertexSet& vstar = {});

struct CosRoot {
  double rho = 0.0;
  unsigned multiplicity = 1;
};

/// Zero set of a canonical form, as families.
struct SpectrumFamilies {
  bool has_zero = false;            // lambda = 0
  bool sin_family = false;          // (k pi / l)^2, k >= 1
  std::vector<CosRoot> cos_roots;   // roots of Q in [-1, 1]
  std::vector<CosRoot> anomalies;   // real roots of Q outside [-1, 1]
  double ell = 1.0;
  double lambda_max = 0.0;
  std::vector<double> eigenvalues;  // distinct zeros in [0, lambda_max]
};

SpectrumFamilies spectrum_families(const TrigForm& f, double lambda_max = 0.0, double ell = 1.0);

/// Distinct zeros of the families in [0, lambda_max], ascending.
std::vector<double> eigenvalues_below(const SpectrumFamilies& fam, double ell, double lambda_max);

/// Weak interlacing of two distinct-value spectra: min(mu) <= min(nu) and
/// between consecutive values of either list lies a value of the other
/// (endpoints included).
bool interlace(const std::vector<double>& mu, const std::vector<double>& nu, double tol = 1e-9);

}  // namespace qgc
