#include <algorithm>
#include <cmath>
#include <vector>

#include "critline/error.hpp"
#include "critline/zeta.hpp"
#include "series_detail.hpp"

namespace critline {
namespace {

constexpr double kLogRate = 1.7627471740390860;  // log(3 + sqrt 8)
constexpr int kMaxTerms = 4000;

// Weights w_k = (d_n - d_k) / d_n of Borwein's algorithm 2, with
// d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!). Computed in log space.
std::vector<double> borwein_weights(int n) {
  std::vector<double> log_a(static_cast<std::size_t>(n) + 1);
  log_a[0] = -std::log(static_cast<double>(n));
  for (int i = 0; i < n; ++i) {
    const double ratio = 4.0 * (n + i) * static_cast<double>(n - i) /
                         ((2.0 * i + 1.0) * (2.0 * i + 2.0));
    log_a[static_cast<std::size_t>(i) + 1] = log_a[static_cast<std::size_t>(i)] + std::log(ratio);
  }
  const double top = *std::max_element(log_a.begin(), log_a.end());
  std::vector<double> suffix(static_cast<std::size_t>(n) + 2, 0.0);
  for (int i = n; i >= 0; --i) {
    suffix[static_cast<std::size_t>(i)] =
        suffix[static_cast<std::size_t>(i) + 1] + std::exp(log_a[static_cast<std::size_t>(i)] - top);
  }
  std::vector<double> w(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    w[static_cast<std::size_t>(k)] = suffix[static_cast<std::size_t>(k) + 1] / suffix[0];
  }
  return w;
}

}  // namespace

EvalResult zeta_eta_oracle(Complex z, const PrecisionParams& p) {
  p.validate();
  require_finite(z, "zeta_eta_oracle");
  if (!(z.real() > 0.0)) {
    throw Error(ErrorCode::kWrongRegion, "eta oracle needs Re z > 0");
  }
  if (std::abs(z - 1.0) < p.pole_radius) {
    throw Error(ErrorCode::kPoleProximity, "eta oracle at z = 1");
  }
  const Complex denom = 1.0 - cpow_log(std::log(2.0), 1.0 - z);
  const double abs_denom = std::abs(denom);
  if (abs_denom <= 1e-3) {
    throw Error(ErrorCode::kEtaDenominatorSmall, "|1 - 2^{1-z}| <= 1e-3");
  }

  // Truncation error of the accelerated series is at most
  // 2 / ((3+sqrt 8)^n |Gamma(z)|); pick n so that this is below 1e-18.
  const double log_inv_gamma = -log_gamma(z).real();
  const double log_target = std::log(2.0) + log_inv_gamma + 18.0 * std::log(10.0);
  const int n = std::clamp(static_cast<int>(std::ceil(log_target / kLogRate)), 8, kMaxTerms);
  const std::vector<double> w = borwein_weights(n);

  CompensatedSum acc;
  double magnitude = 0.0;
  for (int k = 0; k < n; ++k) {
    const Complex term = w[static_cast<std::size_t>(k)] *
                         cpow_log(std::log(k + 1.0), -z);
    magnitude += std::abs(term);
    acc.add((k % 2 == 0) ? term : -term);
  }

  EvalResult r;
  r.value = acc.value() / denom;
  r.engine = Engine::kEtaOracle;
  r.params = p;
  r.tail_bound = 2.0 * std::exp(-n * kLogRate + log_inv_gamma) / abs_denom;
  r.propagated_bound = 8.0 * detail::kEps *
                       (1.0 + std::log(n + 1.0) * std::abs(z)) * (magnitude + 1.0) / abs_denom;
  r.err_bound = r.tail_bound + r.propagated_bound;
  return r;
}

}  // namespace critline
