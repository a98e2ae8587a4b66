#include <cmath>

#include "critline/criteria.hpp"
#include "critline/error.hpp"
#include "report_detail.hpp"

namespace critline {

std::vector<std::int64_t> prime_factors(std::int64_t k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "prime_factors: k >= 1");
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    out.push_back(p);
    while (k % p == 0) k /= p;
  }
  if (k > 1) out.push_back(k);
  return out;
}

namespace {

Complex euler_factor(Complex s, std::int64_t k) {
  Complex factor = 1.0;
  for (std::int64_t p : prime_factors(k)) {
    factor *= 1.0 - cpow_log(std::log(static_cast<double>(p)), -s);
  }
  return factor;
}

}  // namespace

EvalResult l_principal(Complex s, std::int64_t k, const PrecisionParams& p, Exec exec) {
  const Complex factor = euler_factor(s, k);
  EvalResult r = zeta(s, p, exec);
  const double scale = std::abs(factor);
  r.value *= factor;
  r.err_bound = r.err_bound * scale + 4.0 * 2.220446049250313e-16 * std::abs(r.value);
  r.tail_bound *= scale;
  r.propagated_bound *= scale;
  return r;
}

CriterionReport lfunction_check(Complex s, std::int64_t k, const PrecisionParams& p) {
  const auto t0 = std::chrono::steady_clock::now();
  const Complex factor = euler_factor(s, k);
  const EvalResult z = zeta(s, p);
  const EvalResult l = l_principal(s, k, p);
  CriterionReport rep;
  rep.criterion = "lfunction";
  rep.range_lo = k;
  rep.range_hi = k;
  rep.informational = true;
  const double expected = std::abs(z.value) * std::abs(factor);
  const double gap = std::abs(std::abs(l.value) - expected);
  rep.pass = gap <= 1e-12 * std::max(1.0, expected) + l.err_bound;
  rep.min_margin = l.err_bound + 1e-12 * std::max(1.0, expected) - gap;
  rep.metrics["re"] = s.real();
  rep.metrics["im"] = s.imag();
  rep.metrics["k"] = static_cast<double>(k);
  rep.metrics["abs_L"] = std::abs(l.value);
  rep.metrics["abs_zeta"] = std::abs(z.value);
  rep.metrics["abs_euler_factor"] = std::abs(factor);
  rep.metrics["L_re"] = l.value.real();
  rep.metrics["L_im"] = l.value.imag();
  rep.metrics["err_bound"] = l.err_bound;
  for (std::int64_t q : prime_factors(k)) rep.extremal_items.push_back({q, 0.0});
  rep.wall_time_s = detail::seconds_since(t0);
  return rep;
}

}  // namespace critline
