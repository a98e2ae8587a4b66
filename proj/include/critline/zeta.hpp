#pragma once

#include <cstdint>
#include <string_view>

#include "critline/numerics.hpp"
#include "critline/parallel.hpp"

namespace critline {

/// Truncation and tolerance settings shared by every engine call.
struct PrecisionParams {
  std::int64_t N = 100000;    // series truncation length
  int K = 6;                  // continuation depth
  double pole_radius = 1e-6;  // exclusion disc around z = 1 and z = 0
  double tol = 1e-8;          // target absolute error

  static constexpr std::int64_t kMaxN = 100000000;
  static constexpr int kMaxK = 12;

  /// Throws Error(kInvalidArgument) unless 1 <= N <= kMaxN, 1 <= K <= 12,
  /// 0 < pole_radius <= 0.1 and tol > 0.
  void validate() const;

  bool operator==(const PrecisionParams&) const = default;
};

enum class Engine { kDirect, kEq1, kLevelK, kEtaOracle };

std::string_view to_string(Engine engine);
Engine engine_from_string(std::string_view name);

struct EvalResult {
  Complex value;
  double err_bound = 0.0;  // total estimated absolute error
  Engine engine = Engine::kDirect;
  PrecisionParams params;
  double tail_bound = 0.0;        // rigorous truncation envelope of the series part
  double propagated_bound = 0.0;  // recursive/rounding contributions
};

/// Closed-form value of  int_0^1 t^k (n + t)^{-z-k} dt.
struct IntegralTerm {
  Complex value;
  bool degenerate = false;  // closed form unusable; quadrature was used
};

/// k = 1 is the term of the strip continuation,
///   ((n+1)^{1-z} - n^{1-z})/(1-z) + (n/z)((n+1)^{-z} - n^{-z}),
/// k >= 2 follows from one integration by parts,
///   J_k = (k J_{k-1} - (n+1)^{1-z-k}) / (z + k - 1).
/// For n >= 2|z+k| + 4 the same quantity is summed as the convergent binomial
/// expansion n^{-z-k} sum_m C(-z-k, m) n^{-m} / (k+m+1), which avoids the
/// O(n^k) cancellation of the recurrence. When some z + j (0 <= j < k) or
/// 1 - z lies within pole_radius of 0 on the recurrence path, the raw
/// integrand is integrated instead and `degenerate` is set.
IntegralTerm integral_term(std::int64_t n, Complex z, int k, double pole_radius = 1e-6);

/// The raw integrand integrated by adaptive quadrature; the cross-check for
/// integral_term.
Complex integral_term_quadrature(std::int64_t n, Complex z, int k);

/// Sum over n >= 1 of integral_term(n, z, k), truncated at N with an
/// Euler-Maclaurin correction for the discarded tail.
struct SeriesSum {
  Complex value;         // partial + tail_estimate
  Complex partial;       // plain sum of the first N terms
  Complex tail_estimate; // Euler-Maclaurin estimate of the terms n > N
  double tail_bound = 0.0;        // bound on |true tail - tail_estimate|
  double naive_tail_bound = 0.0;  // N^{-Re z - k + 1} / ((k+1)(Re z + k - 1)), uncorrected
  double rounding_bound = 0.0;
};

/// Requires Re z > 1 - k. Does not check the tail against a tolerance.
SeriesSum level_series(Complex z, int k, const PrecisionParams& p,
                       Exec exec = Exec::kParallel);

/// S(z) = sum_n int_0^1 t dt / (n+t)^{z+1}. Requires Re z > 0 and z outside
/// the pole discs; throws Error(kTailTooLarge) when tail_bound > p.tol.
SeriesSum s_sum(Complex z, const PrecisionParams& p, Exec exec = Exec::kParallel);

/// Dirichlet series with Euler-Maclaurin tail; requires Re z >= 1.5.
EvalResult zeta_direct(Complex z, const PrecisionParams& p, Exec exec = Exec::kParallel);

/// zeta(z) = 1 + 1/(z-1) - z S(z) for Re z > 0.
EvalResult zeta_eq1(Complex z, const PrecisionParams& p, Exec exec = Exec::kParallel);

/// Depth-K continuation
///   zeta(z) = 1 + 1/(z-1) - sum_{j=1}^{K-1} (z)_j/(j+1)! (zeta(z+j) - 1)
///             - (z)_K/K! sum_n J_K(n, z),
/// valid for Re z > 1 - K. Inner zeta(z+j) values recurse with depth K - j
/// and bottom out in zeta_direct once Re >= 1.5.
EvalResult zeta_levelk(Complex z, const PrecisionParams& p, Exec exec = Exec::kParallel);

/// Independent engine: alternating eta series with Borwein's acceleration
/// divided by 1 - 2^{1-z}. Requires Re z > 0 and |1 - 2^{1-z}| > 1e-3.
EvalResult zeta_eta_oracle(Complex z, const PrecisionParams& p);

/// Dispatcher: DIRECT for Re z >= 1.5; EQ1 (K = 1) or LEVELK (K >= 2) for
/// 0 < Re z < 1.5; LEVELK with K >= ceil(1 - Re z) + 1 for Re z <= 0.
EvalResult zeta(Complex z, const PrecisionParams& p, Exec exec = Exec::kParallel);

/// Evaluate with an explicitly chosen engine.
EvalResult zeta_with(Engine engine, Complex z, const PrecisionParams& p,
                     Exec exec = Exec::kParallel);

/// |zeta(z) - 2 (2 pi)^{z-1} Gamma(1-z) zeta(1-z) sin(pi z / 2)|.
double functional_equation_residual(Complex z, const PrecisionParams& p);

}  // namespace critline
