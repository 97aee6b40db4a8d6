#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "qgc/graph.hpp"
#include "qgc/laurent.hpp"
#include "qgc/trig_form.hpp"

namespace qgc {

/// Jost function of a compact graph with one lead, in u = exp(i omega l):
///   E(omega) = i^unit_power_of_i * omega^(-e) * F(u).
/// F has rational coefficients and absorbs the scales of phi_N and phi_D,
/// so E = phi_N + i omega phi_D with the raw (determinant) normalization.
struct JostLaurent {
  int e = 0;
  int unit_power_of_i = 0;  // in 0..3
  LaurentPoly F;
  double ell = 1.0;
};

/// Needs |m_N - m_D| = 1 and 2 a_N - m_N = 1 + 2 a_D - m_D, which holds for
/// every single-lead configuration; StructuralError otherwise.
JostLaurent jost_form(const TrigForm& phiN, const TrigForm& phiD, double ell = 1.0);

/// phi_neumann(g) and phi_dirichlet(g, {lead}) fed to jost_form.
JostLaurent jost_for_lead(const CombGraph& g, Vertex lead, double ell = 1.0);

std::complex<double> jost_eval(const JostLaurent& j, std::complex<double> omega);

struct Resonance {
  std::complex<double> omega;  // Re(omega l) in (-pi, pi]
  std::complex<double> u;      // exp(i omega l)
  unsigned multiplicity = 1;
};

/// Poles of S in the strip Re(omega l) in (-pi, pi], repeating with period
/// 2 pi / l. A pole at omega is a zero of E(-omega), i.e. F(1/u) = 0.
struct ResonanceSet {
  std::vector<Resonance> roots;  // sorted by Re omega, then Im omega
  double ell = 1.0;
  double period = 0.0;
};

ResonanceSet resonances(const JostLaurent& j, double tol = 1e-12);

/// S(lambda) = E(sqrt lambda) / E(-sqrt lambda), evaluated from the forms
/// after cancelling their common factors, so S stays finite at embedded
/// eigenvalues. NumericError at a pole.
std::complex<double> s_eval(const TrigForm& phiN, const TrigForm& phiD, double ell, double lambda);

struct EmbeddedEigenvalues {
  bool sin_family = false;        // (k pi / l)^2, k >= 1
  std::vector<double> gcd_roots;  // roots of gcd(Q_N, Q_D) in [-1, 1]
  std::vector<double> values;     // distinct values in (0, lambda_max]
};

EmbeddedEigenvalues embedded_eigenvalues(const TrigForm& phiN, const TrigForm& phiD, double ell,
                                         double lambda_max);

/// Negative eigenvalues from common roots rho > 1 of Q_N and Q_D.
std::vector<double> bound_states(const TrigForm& phiN, const TrigForm& phiD, double ell);

enum class CommonRootKind { embedded, bound, none };

struct CommonRoot {
  CommonRootKind kind = CommonRootKind::none;
  double lambda = 0.0;  // smallest induced lambda (0 for rho = 1)
};

/// Where a common c-root rho lands: |rho| <= 1 gives real omega (embedded,
/// lambda = (arccos rho / l)^2), rho > 1 gives a bound state
/// lambda = -(arccosh rho / l)^2, rho < -1 gives no real lambda.
CommonRoot classify_common_root(double rho, double ell);

}  // namespace qgc
