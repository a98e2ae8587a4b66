#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "critline/zeta.hpp"

namespace critline {

struct ExtremalItem {
  std::int64_t n = 0;
  double value = 0.0;
};

struct CriterionReport {
  std::string criterion;
  std::int64_t range_lo = 0;
  std::int64_t range_hi = 0;
  bool pass = false;
  bool informational = false;  // pass carries no weight (asymptotic statements)
  double min_margin = 0.0;
  std::vector<ExtremalItem> extremal_items;
  double wall_time_s = 0.0;
  std::map<std::string, double> metrics;
};

// Redheffer

inline constexpr int kMaxRedhefferDim = 2000;

/// Exact determinant of a dense n x n integer matrix (row-major) by
/// fraction-free Gaussian elimination with row pivoting.
mpz_class bareiss_determinant(std::vector<mpz_class> a, int n, Exec exec = Exec::kParallel);

/// A(n)_{ij} = 1 if j = 1 or i | j, else 0 (1-based), row-major.
std::vector<mpz_class> redheffer_matrix(int n);

/// det A(n); throws Error(kDimensionTooLarge) above 2000.
mpz_class redheffer_det(int n, Exec exec = Exec::kParallel);

/// mu(k) for 0 <= k <= n_max by a linear sieve (mu(0) = 0).
std::vector<std::int8_t> mobius_sieve(std::int64_t n_max);

/// M(k) = sum_{j <= k} mu(j) for 0 <= k <= n_max.
std::vector<std::int32_t> mertens_sieve(std::int64_t n_max);

/// det A(n) against the sieve value M(n) for every n <= n_max.
CriterionReport redheffer_check(int n_max, Exec exec = Exec::kParallel);

/// Empirical C(eps) = max_{n <= n_max} |M(n)| / n^{1/2 + eps}; informational.
CriterionReport redheffer_growth(std::int64_t n_max, double eps);

// Lagarias

inline constexpr std::int64_t kMaxLagariasN = 10000000;

/// Smallest prime factor of every k <= n_max (spf[0] = spf[1] = 0).
std::vector<std::uint32_t> smallest_prime_factor_sieve(std::int64_t n_max);

/// sigma(k) for k <= n_max, factoring through the smallest-prime-factor table.
std::vector<std::uint64_t> sigma_sieve(std::int64_t n_max, Exec exec = Exec::kParallel);

/// margin(n) = H_n + exp(H_n) log H_n - sigma(n) for n <= n_max.
CriterionReport lagarias_check(std::int64_t n_max, Exec exec = Exec::kParallel);

// Nyman-Beurling

/// {alpha/t} - alpha {1/t}.
double nyman_beurling_function(double alpha, double t);

/// The same function written as alpha floor(1/t) - floor(alpha/t).
double nyman_beurling_piecewise(double alpha, double t);

struct NymanBeurlingResult {
  double distance = 0.0;
  double t_min = 0.0;
  double bias_bound = 0.0;  // t_min (1 + sum |c_k|)^2
  std::vector<double> coefficients;
  int panels = 0;
};

/// Least-squares distance in L2(t_min, 1) from 1 to span{N_alpha}.
NymanBeurlingResult nyman_beurling_solve(std::span<const double> alphas,
                                         std::int64_t quad_breakpoint_cap,
                                         Exec exec = Exec::kParallel);

double nyman_beurling_residual(std::span<const double> alphas,
                               std::int64_t quad_breakpoint_cap);

/// Residuals along the nested chain of the first `sizes[i]` entries of `alphas`.
CriterionReport nyman_beurling_chain(std::span<const double> alphas,
                                     std::span<const int> sizes,
                                     std::int64_t quad_breakpoint_cap);

/// 1/2, 1/3, ..., 1/(count+1).
std::vector<double> reciprocal_alphas(int count);

// Principal-character L-function

/// Distinct prime divisors of k in increasing order, by trial division.
std::vector<std::int64_t> prime_factors(std::int64_t k);

/// L(s, chi_1 mod k) = zeta(s) prod_{p | k} (1 - p^{-s}).
EvalResult l_principal(Complex s, std::int64_t k, const PrecisionParams& p,
                       Exec exec = Exec::kParallel);

/// Evaluates L at s and compares |L| with |zeta| times the Euler factors.
CriterionReport lfunction_check(Complex s, std::int64_t k, const PrecisionParams& p);

}  // namespace critline
