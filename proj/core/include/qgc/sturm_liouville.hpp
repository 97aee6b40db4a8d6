#pragma once

#include <complex>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qgc/graph.hpp"

namespace qgc {

/// Edge potential q sampled on a uniform grid over [0, l], linearly
/// interpolated in between. `symmetric` means q(l - x) = q(x); it is checked
/// against the samples (1e-9) whenever it is set.
struct PotentialSample {
  double ell = 1.0;
  std::vector<double> values;  // at x_k = k l / (values.size() - 1)
  bool symmetric = false;
  bool edge_independent = true;

  double at(double x) const;
};

/// Validating constructor; throws InvalidInput.
PotentialSample make_potential(double ell, std::vector<double> values, bool symmetric,
                               bool edge_independent = true);
PotentialSample constant_potential(double v0, double ell = 1.0);
/// Samples f on n + 1 grid points; the symmetric flag is detected.
PotentialSample sample_potential(const std::function<double(double)>& f, double ell, std::size_t n);

/// "x,q" rows (an optional header line is skipped). The grid must start at
/// 0 and be uniform; l is the last x. The symmetric flag is detected.
PotentialSample read_potential_csv(std::istream& in);
PotentialSample load_potential_csv(const std::string& path);

/// s, s', c, c' at x = l for -y'' + q y = lambda y with s(0) = c'(0) = 0,
/// s'(0) = c(0) = 1.
struct Fundamental {
  std::complex<double> s, sp, c, cp;
};

inline constexpr int kDefaultSteps = 4096;

/// Classical RK4 with `steps` uniform steps (>= 64).
Fundamental integrate_sc(const PotentialSample& q, std::complex<double> lambda, int steps = kDefaultSteps);

/// s^(E-V+r) P_hat(c) with numeric s, c; for a symmetric, edge-independent q.
std::complex<double> phi_eval_numeric(const CombGraph& g, const VertexSet& vstar, const PotentialSample& q,
                                      std::complex<double> lambda, int steps = kDefaultSteps);

/// S(lambda) for g with one lead at `lead`, from phi_eval_numeric.
std::complex<double> s_eval_numeric(const CombGraph& g, Vertex lead, const PotentialSample& q, double lambda,
                                    int steps = kDefaultSteps);

struct AsymptoticRow {
  double lambda = 0.0;
  double err_s = 0.0;  // |s_q(l) - s_0(l)|
  double err_c = 0.0;  // |c_q(l) - c_0(l)|
  double err_S = 0.0;  // |S_q - S_0|, when a graph is given
};

struct AsymptoticReport {
  std::vector<AsymptoticRow> rows;
  double slope_s = 0.0;  // least-squares slope of log err against log lambda
  double slope_c = 0.0;
  std::optional<double> slope_S;
  bool S_decreasing = false;  // err_S strictly decreasing along the rows
};

/// Compares the perturbed and free data along increasing lambdas. The step
/// count grows with sqrt(lambda) l so the integrator error stays well below
/// the differences being measured.
AsymptoticReport asymptotic_check(const PotentialSample& q, const std::vector<double>& lambdas,
                                  const CombGraph* graph = nullptr, Vertex lead = 0);

/// Least-squares slope of log(y) against log(x) over positive pairs.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace qgc
