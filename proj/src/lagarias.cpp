#include <cmath>
#include <string>

#include "critline/criteria.hpp"
#include "critline/error.hpp"
#include "report_detail.hpp"

namespace critline {

std::vector<std::uint32_t> smallest_prime_factor_sieve(std::int64_t n_max) {
  if (n_max < 0 || n_max > kMaxLagariasN * 10) {
    throw Error(ErrorCode::kInvalidArgument, "smallest_prime_factor_sieve: n_max out of range");
  }
  const auto size = static_cast<std::size_t>(n_max) + 1;
  std::vector<std::uint32_t> spf(size, 0);
  std::vector<std::uint32_t> primes;
  for (std::int64_t i = 2; i <= n_max; ++i) {
    if (spf[static_cast<std::size_t>(i)] == 0) {
      spf[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    const std::uint32_t limit = spf[static_cast<std::size_t>(i)];
    for (std::uint32_t p : primes) {
      if (p > limit || i * p > n_max) break;
      spf[static_cast<std::size_t>(i * p)] = p;
    }
  }
  return spf;
}

namespace {

// sigma(n) = prod (p^{e+1} - 1)/(p - 1); sigma(n) < 6 n for n <= 1e8 so
// every partial product fits in 64 bits.
std::uint64_t sigma_from_spf(std::uint64_t n, const std::vector<std::uint32_t>& spf) {
  std::uint64_t result = 1;
  while (n > 1) {
    const std::uint64_t p = spf[static_cast<std::size_t>(n)];
    std::uint64_t power_sum = 1;
    std::uint64_t power = 1;
    while (n % p == 0) {
      n /= p;
      power *= p;
      power_sum += power;
    }
    result *= power_sum;
  }
  return result;
}

}  // namespace

std::vector<std::uint64_t> sigma_sieve(std::int64_t n_max, Exec exec) {
  const std::vector<std::uint32_t> spf = smallest_prime_factor_sieve(n_max);
  std::vector<std::uint64_t> sigma(spf.size(), 0);
  if (n_max >= 1) sigma[1] = 1;
  for_each_index(exec, n_max > 1 ? n_max - 1 : 0, [&](std::int64_t i) {
    const auto n = static_cast<std::uint64_t>(i) + 2;
    sigma[static_cast<std::size_t>(n)] = sigma_from_spf(n, spf);
  });
  return sigma;
}

CriterionReport lagarias_check(std::int64_t n_max, Exec exec) {
  if (n_max < 1 || n_max > kMaxLagariasN) {
    throw Error(ErrorCode::kInvalidArgument,
                "lagarias_check: need 1 <= n_max <= " + std::to_string(kMaxLagariasN));
  }
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::uint32_t> spf = smallest_prime_factor_sieve(n_max);

  // H_n is inherently sequential; the margins are not.
  std::vector<double> harmonic(static_cast<std::size_t>(n_max) + 1, 0.0);
  CompensatedSum h;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    h.add(1.0 / static_cast<double>(n));
    harmonic[static_cast<std::size_t>(n)] = h.value().real();
  }

  std::vector<double> margin(static_cast<std::size_t>(n_max) + 1, 0.0);
  std::vector<double> scale(static_cast<std::size_t>(n_max) + 1, 1.0);
  const std::int64_t blocks = (n_max + kSumBlock - 1) / kSumBlock;
  for_each_index(exec, blocks, [&](std::int64_t b) {
    const std::int64_t lo = 1 + b * kSumBlock;
    const std::int64_t hi = std::min(n_max, lo + kSumBlock - 1);
    for (std::int64_t n = lo; n <= hi; ++n) {
      const double hn = harmonic[static_cast<std::size_t>(n)];
      const auto sigma = static_cast<double>(sigma_from_spf(static_cast<std::uint64_t>(n), spf));
      margin[static_cast<std::size_t>(n)] = hn + std::exp(hn) * std::log(hn) - sigma;
      scale[static_cast<std::size_t>(n)] = std::max(1.0, sigma);
    }
  });

  CriterionReport rep;
  rep.criterion = "lagarias";
  rep.range_lo = 1;
  rep.range_hi = n_max;
  std::int64_t negatives = 0;
  std::int64_t equalities = 0;
  std::int64_t equality_off_one = 0;
  double min_margin = margin[1];
  double min_rel = 0.0;
  std::int64_t min_rel_n = 0;
  std::vector<ExtremalItem> items;
  items.reserve(static_cast<std::size_t>(n_max));
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const double m = margin[static_cast<std::size_t>(n)];
    const double s = scale[static_cast<std::size_t>(n)];
    min_margin = std::min(min_margin, m);
    if (std::abs(m) <= 1e-12 * s) {
      ++equalities;
      if (n != 1) ++equality_off_one;
    } else if (m < 0.0) {
      ++negatives;
    }
    if (n >= 2) {
      items.push_back({n, m});
      if (min_rel_n == 0 || m / s < min_rel) {
        min_rel = m / s;
        min_rel_n = n;
      }
    }
  }
  rep.pass = negatives == 0 && equality_off_one == 0;
  rep.min_margin = min_margin;
  rep.extremal_items = detail::extreme_items(std::move(items), 10, false);
  rep.metrics["negative_margins"] = static_cast<double>(negatives);
  rep.metrics["equality_count"] = static_cast<double>(equalities);
  rep.metrics["equality_off_n1"] = static_cast<double>(equality_off_one);
  rep.metrics["min_relative_margin"] = min_rel;
  rep.metrics["min_relative_margin_n"] = static_cast<double>(min_rel_n);
  rep.wall_time_s = detail::seconds_since(t0);
  return rep;
}

}  // namespace critline
