#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qgc/int_poly.hpp"

namespace qgc {

struct AberthOptions {
  int max_sweeps = 200;
  /// Converged when |p(z)| <= tol * sum |a_k| |z|^k for every root.
  double tol = 1e-12;
  std::uint32_t seed = 0x5eed;
};

/// All complex roots of p (degree >= 1) by Aberth-Ehrlich iteration,
/// started on a slightly perturbed circle. Intended for square-free input.
/// NumericError if some root has not converged after max_sweeps.
std::vector<std::complex<double>> aberth_roots(const IntPoly& p, const AberthOptions& opts = {});

}  // namespace qgc
