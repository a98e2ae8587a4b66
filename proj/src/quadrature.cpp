#include "critline/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "critline/error.hpp"

namespace critline {
namespace {

constexpr int kOrder = 20;

struct GaussLegendre {
  std::array<double, kOrder> nodes{};
  std::array<double, kOrder> weights{};

  GaussLegendre() {
    // Newton iteration on P_n from the Chebyshev initial guesses.
    for (int i = 0; i < kOrder; ++i) {
      double x = std::cos(kPi * (i + 0.75) / (kOrder + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= kOrder; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = kOrder * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      nodes[i] = x;
      weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
  }
};

const GaussLegendre& rule() {
  static const GaussLegendre gl;
  return gl;
}

struct Panel {
  Complex value;
  double mass = 0.0;  // same rule applied to |f|
};

Panel panel(const Integrand& f, double a, double b) {
  const GaussLegendre& gl = rule();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  Complex acc = 0.0;
  double mass = 0.0;
  for (int i = 0; i < kOrder; ++i) {
    const Complex v = f(mid + half * gl.nodes[i]);
    acc += gl.weights[i] * v;
    mass += gl.weights[i] * std::abs(v);
  }
  return {acc * half, mass * std::abs(half)};
}

Complex adapt(const Integrand& f, double a, double b, Complex whole, double tol,
              int depth, const QuadratureOptions& opts) {
  const double mid = 0.5 * (a + b);
  const Panel left = panel(f, a, mid);
  const Panel right = panel(f, mid, b);
  const Complex refined = left.value + right.value;
  // rounding level of the rule itself; nothing below it is reachable
  const double floor = 16.0 * 2.2e-16 * (left.mass + right.mass);
  if (std::abs(refined - whole) <= std::max(tol, floor)) return refined;
  if (depth >= opts.max_depth) {
    throw Error(ErrorCode::kNoConvergence,
                "quadrature exceeded depth cap on [" + std::to_string(a) + ", " +
                    std::to_string(b) + "]");
  }
  return adapt(f, a, mid, left.value, 0.5 * tol, depth + 1, opts) +
         adapt(f, mid, b, right.value, 0.5 * tol, depth + 1, opts);
}

}  // namespace

Complex integrate(const Integrand& f, double a, double b,
                  const QuadratureOptions& opts) {
  if (b == a) return 0.0;
  return adapt(f, a, b, panel(f, a, b).value, opts.abs_tol, 0, opts);
}

Complex integrate_01(const Integrand& f, std::span<const double> breakpoints,
                     const QuadratureOptions& opts) {
  double prev = 0.0;
  for (double bp : breakpoints) {
    if (!(bp > 0.0 && bp < 1.0) || bp < prev) {
      throw Error(ErrorCode::kInvalidArgument,
                  "integrate_01: breakpoints must be sorted and inside (0, 1)");
    }
    prev = bp;
  }

  CompensatedSum total;
  double left = 0.0;
  auto add_panel = [&](double right) {
    if (right > left) {
      QuadratureOptions local = opts;
      local.abs_tol = opts.abs_tol * (right - left);
      total.add(integrate(f, left, right, local));
    }
    left = right;
  };
  for (double bp : breakpoints) add_panel(bp);
  add_panel(1.0);
  return total.value();
}

}  // namespace critline
