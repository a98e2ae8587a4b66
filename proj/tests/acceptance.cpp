// One PASS/FAIL line per acceptance criterion, with wall time and the
// measured quantity. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "critline/characterization.hpp"
#include "critline/criteria.hpp"
#include "critline/error.hpp"
#include "critline/zero_finder.hpp"
#include "critline/zeta.hpp"
#include "oracles.hpp"

using namespace critline;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

PrecisionParams with(std::int64_t n, int k) {
  PrecisionParams p;
  p.N = n;
  p.K = k;
  return p;
}

double seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome zeta_two() {
  const auto t0 = std::chrono::steady_clock::now();
  const double exact = std::numbers::pi * std::numbers::pi / 6.0;
  const double e_direct = std::abs(zeta_direct({2.0, 0.0}, with(100000, 6)).value - exact);
  const double e_eq1 = std::abs(zeta_eq1({2.0, 0.0}, with(100000, 1)).value - exact);
  const double t = seconds(t0);
  return {e_direct < 1e-10 && e_eq1 < 1e-10 && t < 1.0,
          fmt("|DIRECT - pi^2/6| = %.2e, |EQ1 - pi^2/6| = %.2e, %.3f s", e_direct, e_eq1, t)};
}

Outcome telescoping() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (const Complex z : {Complex(0.5, 3.0), Complex(0.8, -7.0), Complex(2.0, 0.0)}) {
    const int n = 100;
    CompensatedSum lhs;
    for (int k = 1; k <= n; ++k) lhs.add(integral_term(k, z, 1).value);
    const Complex top = cpow_posbase(n + 1.0, 1.0 - z);
    CompensatedSum powers;
    for (int m = 1; m <= n + 1; ++m) powers.add(cpow_posbase(m, -z));
    const Complex right = z / (1.0 - z) * (top - 1.0) + top - powers.value();
    worst = std::max(worst, std::abs(z * lhs.value() - right) / std::abs(right));
  }
  const double t = seconds(t0);
  return {worst < 1e-11 && t < 0.1, fmt("max relative gap %.2e at N=100, %.4f s", worst, t)};
}

Outcome characterization_grid() {
  const auto t0 = std::chrono::steady_clock::now();
  const PrecisionParams p = with(20000, 6);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      const Complex z(0.05 + 0.9 * i / 19.0, -30.0 + 60.0 * j / 19.0);
      worst = std::max(worst, characterization_residual(z, p).identity_gap);
    }
  }
  const double t = seconds(t0);
  return {worst < 1e-8 && t < 30.0, fmt("max identity_gap %.2e over 400 points, %.1f s", worst, t)};
}

Outcome first_zeros() {
  const std::vector<double> oracle_y = oracle::hardy_zeros(10.0, 30.0, 0.1);
  const double published[] = {14.134725, 21.022040, 25.010858};
  const auto t0 = std::chrono::steady_clock::now();
  const ZeroSearch found = find_zeros(10.0, 30.0, 0.05, with(1000000, 1));
  const double t = seconds(t0);
  bool ok = oracle_y.size() == 3 && found.records.size() == 3 && t < 120.0;
  double dy = 0.0, dpub = 0.0, res = 0.0;
  for (std::size_t i = 0; ok && i < 3; ++i) {
    dy = std::max(dy, std::abs(found.records[i].y - oracle_y[i]));
    dpub = std::max(dpub, std::abs(found.records[i].y - published[i]));
    res = std::max(res, found.records[i].char_residual);
  }
  ok = ok && dy < 1e-5 && dpub < 1e-5 && res < 1e-3;
  return {ok, fmt("found %zu, max |y - oracle| %.1e, max |y - table| %.1e, max char_residual %.1e, "
                  "%.1f s",
                  found.records.size(), dy, dpub, res, t)};
}

Outcome rectangle() {
  const auto t0 = std::chrono::steady_clock::now();
  const ScanReport r = scan_rectangle(0.1, 0.9, 2.0, 50.0, 0.02, 0.02, with(1000, 1));
  const double t = seconds(t0);
  bool near_line = true;
  std::size_t small = 0;
  for (const GridSample& s : r.samples) {
    if (s.abs_zeta < 1e-3) {
      ++small;
      near_line = near_line && std::abs(s.x - 0.5) <= 0.02 + 1e-12;
    }
  }
  return {r.off_line_violations.empty() && near_line && t < 600.0,
          fmt("%zu points, %zu minima, %zu below 1e-3, %zu violations, %.1f s", r.samples.size(),
              r.minima.size(), small, r.off_line_violations.size(), t)};
}

Outcome trivial_zeros() {
  const auto t0 = std::chrono::steady_clock::now();
  const double z2 = std::abs(zeta({-2.0, 0.0}, with(10000, 6)).value);
  const double z4 = std::abs(zeta({-4.0, 0.0}, with(10000, 6)).value);
  double fe = 0.0;
  for (int i = 0; i < 9; ++i) {
    for (double y : {0.5, 3.0, 8.0, 14.134725, 21.0, 30.0}) {
      const double x = -0.85 + 1.7 * i / 8.0;
      fe = std::max(fe, functional_equation_residual({x, y}, {}));
    }
  }
  const double t = seconds(t0);
  return {z2 < 1e-8 && z4 < 1e-6 && fe < 1e-6 && t < 60.0,
          fmt("|zeta(-2)| %.1e, |zeta(-4)| %.1e, max functional-equation residual %.1e, %.1f s", z2,
              z4, fe, t)};
}

Outcome redheffer() {
  const auto t0 = std::chrono::steady_clock::now();
  const CriterionReport r = redheffer_check(500);
  const double t = seconds(t0);
  const CriterionReport g = redheffer_growth(10000, 0.25);
  return {r.pass && t < 60.0,
          fmt("mismatches %.0f for n <= 500 (%.1f s); C(0.25) over n <= 1e4 = %.4f, excluding n=1 "
              "%.4f at n=%.0f",
              r.metrics.at("mismatches"), t, g.metrics.at("C"), g.metrics.at("C_n_ge_2"),
              g.metrics.at("C_n_ge_2_argmax"))};
}

Outcome lagarias() {
  const CriterionReport r = lagarias_check(1000000);
  const bool eq_one = r.metrics.at("equality_count") == 1.0 && r.metrics.at("equality_off_n1") == 0.0;
  return {r.pass && eq_one && r.wall_time_s < 60.0,
          fmt("negative margins %.0f, equalities %.0f (n=1 only: %s), smallest n>=2 margin %.4f at "
              "n=%lld, %.2f s",
              r.metrics.at("negative_margins"), r.metrics.at("equality_count"), eq_one ? "yes" : "no",
              r.extremal_items.front().value,
              static_cast<long long>(r.extremal_items.front().n), r.wall_time_s)};
}

Outcome nyman_beurling() {
  const std::vector<double> alphas = reciprocal_alphas(16);
  const std::vector<int> sizes{1, 2, 4, 8, 16};
  const CriterionReport r = nyman_beurling_chain(alphas, sizes, 1000);
  std::string ds;
  for (const ExtremalItem& e : r.extremal_items) ds += fmt(" d%lld=%.5f", static_cast<long long>(e.n), e.value);
  return {r.pass && r.wall_time_s < 60.0, fmt("%s, %.2f s", ds.c_str() + 1, r.wall_time_s)};
}

Outcome alpha_surrogates() {
  oracle::Rng rng(1000);
  int agree = 0, alpha_ok = 0;
  double worst_on_line = 0.0;
  for (int i = 0; i < 1000; ++i) {
    // dyadic rationals are exact in binary floating point
    const double x = static_cast<double>(rng.integer(0, 16)) / 16.0;
    double y = static_cast<double>(rng.integer(-400, 400)) / 8.0;
    if (y == 0.0) y = 0.125;
    const Complex z(x, y);
    const bool on_line = x == 0.5;
    if ((critical_line_indicator(z) == 0.0) == on_line) ++agree;
    if (x == 0.0 && y == 0.0) continue;
    const double im = std::abs(lemma2_alpha(z).imag());
    if (on_line) worst_on_line = std::max(worst_on_line, im);
    if (on_line ? im < 1e-14 : im > 0.0) ++alpha_ok;
  }
  return {agree == 1000 && alpha_ok == 1000,
          fmt("indicator exact on %d/1000, alpha real iff on line on %d/1000, max |Im alpha| on line "
              "%.1e",
              agree, alpha_ok, worst_on_line)};
}

Outcome pole_residue() {
  double worst = 0.0;
  for (int i = 0; i < 8; ++i) {
    const Complex z = 1.0 + std::polar(1e-3, 2.0 * std::numbers::pi * i / 8.0);
    worst = std::max(worst, std::abs((z - 1.0) * zeta(z, {}).value - 1.0));
  }
  return {worst < 5e-3, fmt("max |(z-1) zeta(z) - 1| = %.3e on |z-1| = 1e-3", worst)};
}

Outcome approximation_audit() {
  std::string detail;
  bool ok = true;
  double previous = 0.0;
  for (std::int64_t n : {100, 1000, 10000}) {
    const ApproxQuality q = approx_quality(n, {0.5, 14.0});
    const double normalized = q.ratio / (std::sqrt(static_cast<double>(n)) / 2.0);
    ok = ok && normalized > 0.5 && normalized < 2.0 && q.ratio > previous;
    previous = q.ratio;
    detail += fmt("%sn=%lld ratio %.4f (/(sqrt n/2) = %.6f)", detail.empty() ? "" : ", ",
                  static_cast<long long>(n), q.ratio, normalized);
  }
  return {ok, detail};
}

}  // namespace

int main() {
  set_thread_count(resolve_thread_count(std::nullopt));
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"zeta(2) by direct summation and the one-level continuation", zeta_two},
      {"telescoping identity of the closed-form partial sums", telescoping},
      {"characterization identity on a 20x20 strip grid", characterization_grid},
      {"first three critical-line zeros at N=1e6", first_zeros},
      {"off-line rectangle scan [0.1,0.9]x[2,50]", rectangle},
      {"trivial zeros and functional equation", trivial_zeros},
      {"Redheffer determinant equals Mertens for n <= 500", redheffer},
      {"Lagarias inequality for n <= 1e6", lagarias},
      {"Nyman-Beurling residual along a nested chain", nyman_beurling},
      {"critical-line indicator and alpha reality", alpha_surrogates},
      {"pole residue on the r = 1e-3 circle", pole_residue},
      {"tail approximation ratio grows like sqrt(n)", approximation_audit},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%s %d/%zu criteria\n", failures == 0 ? "PASS" : "FAIL",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
