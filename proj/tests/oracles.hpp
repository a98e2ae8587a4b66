#pragma once

// Reference computations that share no code path with the library kernels
// they are compared against.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "critline/zeta.hpp"

namespace oracle {

using Complex = std::complex<double>;
constexpr double kPi = 3.14159265358979323846;

/// log Gamma on the analytic branch for Re z > 0: shift to Re >= 20 by the
/// recurrence, then the Stirling series with eight Bernoulli terms.
inline Complex stirling_log_gamma(Complex z) {
  Complex shift = 0.0;
  while (z.real() < 20.0) {
    shift += std::log(z);
    z += 1.0;
  }
  static constexpr double b[] = {1.0 / 12,     -1.0 / 360,   1.0 / 1260,   -1.0 / 1680,
                                 1.0 / 1188,   -691.0 / 360360, 1.0 / 156,  -3617.0 / 122400};
  Complex series = 0.0;
  Complex zp = z;
  const Complex z2 = z * z;
  for (double c : b) {
    series += c / zp;
    zp *= z2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + series - shift;
}

/// Hardy's Z(t) = exp(i theta(t)) zeta(1/2 + it), real for real t. Only
/// theta mod 2 pi matters, so the branch of log Gamma is irrelevant.
inline double hardy_z(double t) {
  const double theta =
      stirling_log_gamma(Complex(0.25, 0.5 * t)).imag() - 0.5 * t * std::log(kPi);
  const Complex zeta = critline::zeta_eta_oracle(Complex(0.5, t), {}).value;
  return (std::polar(1.0, theta) * zeta).real();
}

/// Ordinates of sign changes of Z on [a, b] sampled at `step`, refined by
/// bisection to width `width`.
inline std::vector<double> hardy_zeros(double a, double b, double step, double width = 1e-10) {
  std::vector<double> out;
  double lo = a;
  double z_lo = hardy_z(lo);
  for (double hi = a + step; hi <= b + 1e-12; hi += step) {
    const double z_hi = hardy_z(hi);
    if ((z_lo < 0.0) != (z_hi < 0.0)) {
      double l = lo, h = hi, zl = z_lo;
      while (h - l > width) {
        const double m = 0.5 * (l + h);
        const double zm = hardy_z(m);
        if ((zm < 0.0) == (zl < 0.0)) {
          l = m;
          zl = zm;
        } else {
          h = m;
        }
      }
      out.push_back(0.5 * (l + h));
    }
    lo = hi;
    z_lo = z_hi;
  }
  return out;
}

/// Plain Dirichlet partial sum with the integral tail, for Re z well above 1.
inline Complex dirichlet_zeta(Complex z, int n) {
  Complex s = 0.0;
  for (int k = n; k >= 1; --k) s += std::exp(-z * std::log(static_cast<double>(k)));
  const double m = n + 0.5;
  return s + std::exp((1.0 - z) * std::log(m)) / (z - 1.0);
}

/// Determinant by permutation expansion; n <= 8.
inline long long leibniz_det(const std::vector<long long>& a, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  long long total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
    long long prod = 1;
    for (int i = 0; i < n; ++i) prod *= a[static_cast<std::size_t>(i * n + perm[static_cast<std::size_t>(i)])];
    total += inversions % 2 ? -prod : prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Determinant by Gaussian elimination over the rationals.
inline mpz_class rational_det(const std::vector<long long>& in, int n) {
  std::vector<mpq_class> a(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) a[i] = mpq_class(static_cast<long>(in[i]));
  const auto at = [&](int i, int j) -> mpq_class& { return a[static_cast<std::size_t>(i * n + j)]; };
  mpq_class det = 1;
  for (int k = 0; k < n; ++k) {
    int r = k;
    while (r < n && at(r, k) == 0) ++r;
    if (r == n) return 0;
    if (r != k) {
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
      det = -det;
    }
    det *= at(k, k);
    for (int i = k + 1; i < n; ++i) {
      const mpq_class f = at(i, k) / at(k, k);
      for (int j = k; j < n; ++j) at(i, j) -= f * at(k, j);
    }
  }
  det.canonicalize();
  return det.get_num();
}

inline int trial_mobius(std::int64_t n) {
  int sign = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return n > 1 ? -sign : sign;
}

inline std::uint64_t trial_sigma(std::uint64_t n) {
  std::uint64_t s = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    s += d;
    if (d * d != n) s += n / d;
  }
  return s;
}

/// Seeded stream for property tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(engine_); }
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace oracle
