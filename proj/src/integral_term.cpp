#include <cmath>
#include <string>

#include "critline/error.hpp"
#include "critline/quadrature.hpp"
#include "critline/zeta.hpp"
#include "series_detail.hpp"

namespace critline {
namespace detail {
namespace {

// n^{-z-k} sum_m C(-z-k, m) n^{-m} / (k + m + 1); successive term ratio is
// at most max(|z+k|, 1) / n <= 1/2 under the caller's switch condition.
Complex binomial_expansion(std::int64_t n, Complex z, int k) {
  const double nd = static_cast<double>(n);
  const double inv_n = 1.0 / nd;
  const Complex a = -(z + static_cast<double>(k));
  Complex coef = 1.0;
  Complex sum = 1.0 / (k + 1.0);
  for (int m = 0; m < 400; ++m) {
    coef *= (a - static_cast<double>(m)) * (inv_n / (m + 1.0));
    const Complex term = coef / (k + m + 2.0);
    sum += term;
    if (std::norm(term) <= 1e-34 * std::norm(sum)) break;
  }
  return cpow_log(std::log(nd), a) * sum;
}

bool closed_form_degenerate(Complex z, int k, double pole_radius) {
  if (std::abs(1.0 - z) < pole_radius) return true;
  for (int j = 0; j < k; ++j) {
    if (std::abs(z + static_cast<double>(j)) < pole_radius) return true;
  }
  return false;
}

Complex closed_form_recurrence(std::int64_t n, Complex z, int k) {
  const double nd = static_cast<double>(n);
  const double step = std::log1p(1.0 / nd);
  const Complex one_minus_z = 1.0 - z;
  // J_0 = ((n+1)^{1-z} - n^{1-z}) / (1-z) = n^{1-z} L (e^{(1-z)L} - 1)/((1-z)L)
  Complex j = cpow_log(std::log(nd), one_minus_z) * step * expm1_over(one_minus_z * step);
  Complex upper = cpow_log(std::log1p(nd), one_minus_z);
  for (int i = 1; i <= k; ++i) {
    upper /= nd + 1.0;
    j = (static_cast<double>(i) * j - upper) / (z + static_cast<double>(i - 1));
  }
  return j;
}

}  // namespace

Complex integral_term_fast(std::int64_t n, Complex z, int k, double pole_radius,
                           bool* degenerate) {
  const double nd = static_cast<double>(n);
  if (nd >= 2.0 * std::abs(z + static_cast<double>(k)) + 4.0) {
    return binomial_expansion(n, z, k);
  }
  if (closed_form_degenerate(z, k, pole_radius)) {
    if (degenerate) *degenerate = true;
    return integral_term_quadrature(n, z, k);
  }
  return closed_form_recurrence(n, z, k);
}

}  // namespace detail

IntegralTerm integral_term(std::int64_t n, Complex z, int k, double pole_radius) {
  if (n < 1 || k < 1) {
    throw Error(ErrorCode::kInvalidArgument, "integral_term: need n >= 1 and k >= 1");
  }
  require_finite(z, "integral_term");
  IntegralTerm out;
  out.value = detail::integral_term_fast(n, z, k, pole_radius, &out.degenerate);
  return out;
}

Complex integral_term_quadrature(std::int64_t n, Complex z, int k) {
  const double nd = static_cast<double>(n);
  const Complex exponent = -(z + static_cast<double>(k));
  const Integrand f = [&](double t) {
    return std::pow(t, k) * cpow_log(std::log(nd + t), exponent);
  };
  return integrate_01(f, {});
}

}  // namespace critline
