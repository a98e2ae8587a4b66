#include <algorithm>
#include <cmath>
#include <string>

#include "critline/criteria.hpp"
#include "critline/error.hpp"
#include "report_detail.hpp"

namespace critline {
using detail::seconds_since;

mpz_class bareiss_determinant(std::vector<mpz_class> a, int n, Exec exec) {
  if (n < 0 || a.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::kInvalidArgument, "bareiss_determinant: size mismatch");
  }
  if (n == 0) return 1;
  const auto idx = [n](int i, int j) {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j);
  };
  int sign = 1;
  mpz_class prev = 1;
  std::vector<int> cols;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[idx(k, k)] == 0) {
      int r = k + 1;
      while (r < n && a[idx(r, k)] == 0) ++r;
      if (r == n) return 0;
      for (int j = k; j < n; ++j) std::swap(a[idx(k, j)], a[idx(r, j)]);
      sign = -sign;
    }
    const mpz_class pivot = a[idx(k, k)];
    const int rows = n - k - 1;
    if (pivot == prev) {
      // a_ij p - a_ik a_kj is divisible by p, so only the nonzero
      // columns of the pivot row move.
      cols.clear();
      for (int j = k + 1; j < n; ++j) {
        if (a[idx(k, j)] != 0) cols.push_back(j);
      }
      for_each_index(exec, rows, [&](std::int64_t r) {
        const int i = k + 1 + static_cast<int>(r);
        if (a[idx(i, k)] == 0) return;
        const mpz_class f = a[idx(i, k)];
        mpz_class t;
        for (int j : cols) {
          t = f * a[idx(k, j)];
          mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), pivot.get_mpz_t());
          a[idx(i, j)] -= t;
        }
        a[idx(i, k)] = 0;
      });
    } else {
      for_each_index(exec, rows, [&](std::int64_t r) {
        const int i = k + 1 + static_cast<int>(r);
        mpz_class t;
        for (int j = k + 1; j < n; ++j) {
          t = a[idx(i, j)] * pivot - a[idx(i, k)] * a[idx(k, j)];
          mpz_divexact(a[idx(i, j)].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        }
        a[idx(i, k)] = 0;
      });
    }
    prev = pivot;
  }
  return sign * a[idx(n - 1, n - 1)];
}

std::vector<mpz_class> redheffer_matrix(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "redheffer_matrix: n >= 1");
  std::vector<mpz_class> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j == 1 || j % i == 0) a[static_cast<std::size_t>(i - 1) * n + (j - 1)] = 1;
    }
  }
  return a;
}

mpz_class redheffer_det(int n, Exec exec) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "redheffer_det: n >= 1");
  if (n > kMaxRedhefferDim) {
    throw Error(ErrorCode::kDimensionTooLarge,
                "redheffer_det: n = " + std::to_string(n) + " exceeds 2000");
  }
  // Index-reversed copy B_ij = A_{n+1-i, n+1-j}: same determinant, and
  // elimination from the large divisors down keeps every pivot at 1.
  std::vector<mpz_class> b(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    const int ai = n + 1 - i;
    for (int j = 1; j <= n; ++j) {
      const int aj = n + 1 - j;
      if (aj == 1 || aj % ai == 0) b[static_cast<std::size_t>(i - 1) * n + (j - 1)] = 1;
    }
  }
  return bareiss_determinant(std::move(b), n, exec);
}

std::vector<std::int8_t> mobius_sieve(std::int64_t n_max) {
  if (n_max < 0) throw Error(ErrorCode::kInvalidArgument, "mobius_sieve: n_max >= 0");
  const auto size = static_cast<std::size_t>(n_max) + 1;
  std::vector<std::int8_t> mu(size, 0);
  std::vector<bool> composite(size, false);
  std::vector<std::int64_t> primes;
  if (n_max >= 1) mu[1] = 1;
  for (std::int64_t i = 2; i <= n_max; ++i) {
    if (!composite[static_cast<std::size_t>(i)]) {
      primes.push_back(i);
      mu[static_cast<std::size_t>(i)] = -1;
    }
    for (std::int64_t p : primes) {
      const std::int64_t ip = i * p;
      if (ip > n_max) break;
      composite[static_cast<std::size_t>(ip)] = true;
      if (i % p == 0) {
        mu[static_cast<std::size_t>(ip)] = 0;
        break;
      }
      mu[static_cast<std::size_t>(ip)] = static_cast<std::int8_t>(-mu[static_cast<std::size_t>(i)]);
    }
  }
  return mu;
}

std::vector<std::int32_t> mertens_sieve(std::int64_t n_max) {
  const std::vector<std::int8_t> mu = mobius_sieve(n_max);
  std::vector<std::int32_t> m(mu.size(), 0);
  std::int32_t acc = 0;
  for (std::size_t k = 0; k < mu.size(); ++k) {
    acc += mu[k];
    m[k] = acc;
  }
  return m;
}

CriterionReport redheffer_check(int n_max, Exec exec) {
  if (n_max < 1 || n_max > kMaxRedhefferDim) {
    throw Error(ErrorCode::kDimensionTooLarge, "redheffer_check: need 1 <= n_max <= 2000");
  }
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::int32_t> m = mertens_sieve(n_max);
  std::vector<mpz_class> det(static_cast<std::size_t>(n_max) + 1);
  for_each_index(exec, n_max, [&](std::int64_t i) {
    const int n = static_cast<int>(i) + 1;
    det[static_cast<std::size_t>(n)] = redheffer_det(n, Exec::kSerial);
  });

  CriterionReport rep;
  rep.criterion = "redheffer";
  rep.range_lo = 1;
  rep.range_hi = n_max;
  std::int64_t mismatches = 0;
  std::vector<ExtremalItem> items;
  for (int n = 1; n <= n_max; ++n) {
    const mpz_class& d = det[static_cast<std::size_t>(n)];
    if (d != m[static_cast<std::size_t>(n)]) {
      ++mismatches;
    }
    items.push_back({n, std::abs(d.get_d())});
  }
  rep.pass = mismatches == 0;
  rep.min_margin = -static_cast<double>(mismatches);
  rep.extremal_items = detail::extreme_items(std::move(items), 10, true);
  rep.metrics["mismatches"] = static_cast<double>(mismatches);
  rep.metrics["det_at_n_max"] = det[static_cast<std::size_t>(n_max)].get_d();
  rep.metrics["mertens_at_n_max"] = m[static_cast<std::size_t>(n_max)];
  rep.wall_time_s = seconds_since(t0);
  return rep;
}

CriterionReport redheffer_growth(std::int64_t n_max, double eps) {
  if (n_max < 1) throw Error(ErrorCode::kInvalidArgument, "redheffer_growth: n_max >= 1");
  if (!(eps > 0.0)) throw Error(ErrorCode::kInvalidArgument, "redheffer_growth: eps > 0");
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::int32_t> m = mertens_sieve(n_max);
  const double power = 0.5 + eps;

  CriterionReport rep;
  rep.criterion = "redheffer-growth";
  rep.range_lo = 1;
  rep.range_hi = n_max;
  rep.informational = true;
  rep.pass = true;
  double c_all = 0.0;
  double c_tail = 0.0;
  std::int64_t arg_all = 1;
  std::int64_t arg_tail = 0;
  std::int32_t max_abs = 0;
  std::vector<ExtremalItem> items;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const std::int32_t mn = m[static_cast<std::size_t>(n)];
    const double ratio = std::abs(mn) / std::pow(static_cast<double>(n), power);
    max_abs = std::max(max_abs, std::abs(mn));
    if (ratio > c_all) {
      c_all = ratio;
      arg_all = n;
    }
    if (n >= 2 && ratio > c_tail) {
      c_tail = ratio;
      arg_tail = n;
    }
    items.push_back({n, ratio});
  }
  rep.min_margin = 0.0;
  rep.extremal_items = detail::extreme_items(std::move(items), 10, true);
  rep.metrics["eps"] = eps;
  rep.metrics["C"] = c_all;
  rep.metrics["C_argmax"] = static_cast<double>(arg_all);
  rep.metrics["C_n_ge_2"] = c_tail;
  rep.metrics["C_n_ge_2_argmax"] = static_cast<double>(arg_tail);
  rep.metrics["max_abs_mertens"] = max_abs;
  rep.wall_time_s = seconds_since(t0);
  return rep;
}

}  // namespace critline
