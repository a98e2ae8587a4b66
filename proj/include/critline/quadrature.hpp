#pragma once

#include <functional>
#include <span>

#include "critline/numerics.hpp"

namespace critline {

using Integrand = std::function<Complex(double)>;

struct QuadratureOptions {
  double abs_tol = 1e-13;
  int max_depth = 40;
};

/// Adaptive Gauss-Legendre integration over [a, b].
///
/// Each panel is compared against its two halves; a panel is accepted when
/// the two estimates agree to its share (b - a)-proportional of abs_tol.
/// Throws Error(kNoConvergence) past max_depth bisections.
Complex integrate(const Integrand& f, double a, double b,
                  const QuadratureOptions& opts = {});

/// Integral over (0, 1) split at the given sorted breakpoints, which must lie
/// strictly inside (0, 1). The integrand only needs to be smooth between
/// consecutive breakpoints.
Complex integrate_01(const Integrand& f, std::span<const double> breakpoints,
                     const QuadratureOptions& opts = {});

}  // namespace critline
