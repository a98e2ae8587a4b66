#pragma once

#include <array>
#include <cstdint>

#include "critline/numerics.hpp"

namespace critline::detail {

/// Hot-path integral term; sets *degenerate when the quadrature fallback ran.
Complex integral_term_fast(std::int64_t n, Complex z, int k, double pole_radius,
                           bool* degenerate);

/// B_{2j} / (2j)! for j = 1..6.
inline constexpr std::array<double, 6> kBernoulliOverFactorial = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
};

/// Number of Euler-Maclaurin correction terms used by every tail.
inline constexpr int kEmTerms = static_cast<int>(kBernoulliOverFactorial.size());

/// 2 zeta(2p+1) / (2 pi)^{2p+1} for p = kEmTerms, rounded up.
inline constexpr double kEmRemainderFactor = 2.0003 / 2.3786924e10;

inline constexpr double kEps = 2.220446049250313e-16;

/// log(1e8 + 1): the largest log n any series visits, used so that rounding
/// envelopes do not depend on N.
inline constexpr double kMaxLogN = 18.42068075;

/// (a)_m = a (a+1) ... (a+m-1).
inline Complex rising(Complex a, int m) {
  Complex r = 1.0;
  for (int i = 0; i < m; ++i) r *= a + static_cast<double>(i);
  return r;
}

inline double factorial(int m) {
  double f = 1.0;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

}  // namespace critline::detail
