#include <array>
#include <cmath>
#include <optional>
#include <string>

#include "critline/error.hpp"
#include "critline/zeta.hpp"
#include "series_detail.hpp"

namespace critline {

using detail::kBernoulliOverFactorial;
using detail::kEmRemainderFactor;
using detail::kEmTerms;
using detail::kEps;
using detail::kMaxLogN;
using detail::rising;

void PrecisionParams::validate() const {
  if (N < 1 || N > kMaxN) {
    throw Error(ErrorCode::kInvalidArgument,
                "PrecisionParams: N must be in [1, " + std::to_string(kMaxN) + "]");
  }
  if (K < 1 || K > kMaxK) {
    throw Error(ErrorCode::kInvalidArgument, "PrecisionParams: K must be in [1, 12]");
  }
  if (!(pole_radius > 0.0 && pole_radius <= 0.1)) {
    throw Error(ErrorCode::kInvalidArgument,
                "PrecisionParams: pole_radius must be in (0, 0.1]");
  }
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "PrecisionParams: tol must be positive");
  }
}

std::string_view to_string(Engine engine) {
  switch (engine) {
    case Engine::kDirect: return "DIRECT";
    case Engine::kEq1: return "EQ1";
    case Engine::kLevelK: return "LEVELK";
    case Engine::kEtaOracle: return "ETA_ORACLE";
  }
  return "UNKNOWN";
}

Engine engine_from_string(std::string_view name) {
  if (name == "DIRECT" || name == "direct") return Engine::kDirect;
  if (name == "EQ1" || name == "eq1") return Engine::kEq1;
  if (name == "LEVELK" || name == "levelk") return Engine::kLevelK;
  if (name == "ETA_ORACLE" || name == "eta" || name == "eta_oracle") {
    return Engine::kEtaOracle;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown engine '" + std::string(name) + "'");
}

SeriesSum level_series(Complex z, int k, const PrecisionParams& p, Exec exec) {
  const double x = z.real();
  if (!(x > 1.0 - k)) {
    throw Error(ErrorCode::kWrongRegion, "level_series needs Re z > 1 - k");
  }
  const double pr = p.pole_radius;
  SeriesSum out;
  out.partial = blocked_sum(exec, 1, p.N, [&](std::int64_t n) {
    return detail::integral_term_fast(n, z, k, pr, nullptr);
  });

  // Euler-Maclaurin on f(u) = J_k(u, z) from M = N + 1:
  //   int_M^inf f = J_k(M, z-1) / (z+k-1),
  //   f^{(m)}(u) = (-1)^m (z+k)_m J_k(u, z+m).
  const std::int64_t m0 = p.N + 1;
  const Complex zk = z + static_cast<double>(k);
  CompensatedSum tail;
  tail.add(detail::integral_term_fast(m0, z - 1.0, k, pr, nullptr) / (zk - 1.0));
  tail.add(0.5 * detail::integral_term_fast(m0, z, k, pr, nullptr));
  for (int j = 1; j <= kEmTerms; ++j) {
    const int order = 2 * j - 1;
    tail.add(kBernoulliOverFactorial[j - 1] * rising(zk, order) *
             detail::integral_term_fast(m0, z + static_cast<double>(order), k, pr, nullptr));
  }
  out.tail_estimate = tail.value();
  out.value = out.partial + out.tail_estimate;

  const double md = static_cast<double>(m0);
  const int rem = 2 * kEmTerms + 1;
  out.tail_bound = kEmRemainderFactor * std::abs(rising(zk, rem)) *
                   std::pow(md, -(x + k + rem - 1)) / ((k + 1.0) * (x + k + rem - 1));
  out.naive_tail_bound = std::pow(static_cast<double>(p.N), -(x + k - 1)) /
                         ((k + 1.0) * (x + k - 1));
  const double abs_sum_bound = (1.0 + 1.0 / (x + k - 1)) / (k + 1.0);
  out.rounding_bound = 8.0 * kEps * (1.0 + kMaxLogN * std::abs(zk)) * abs_sum_bound;
  return out;
}

SeriesSum s_sum(Complex z, const PrecisionParams& p, Exec exec) {
  p.validate();
  require_finite(z, "s_sum");
  if (!(z.real() > 0.0)) {
    throw Error(ErrorCode::kWrongRegion, "s_sum needs Re z > 0");
  }
  if (std::abs(z - 1.0) < p.pole_radius || std::abs(z) < p.pole_radius) {
    throw Error(ErrorCode::kPoleProximity, "s_sum inside an exclusion disc");
  }
  SeriesSum out = level_series(z, 1, p, exec);
  if (out.tail_bound > p.tol) {
    throw Error(ErrorCode::kTailTooLarge,
                "s_sum tail bound " + std::to_string(out.tail_bound) + " exceeds tol");
  }
  return out;
}

EvalResult zeta_direct(Complex z, const PrecisionParams& p, Exec exec) {
  p.validate();
  require_finite(z, "zeta_direct");
  const double x = z.real();
  if (x < 1.5) {
    throw Error(ErrorCode::kWrongRegion, "zeta_direct needs Re z >= 1.5");
  }
  const Complex partial = blocked_sum(exec, 1, p.N, [&](std::int64_t n) {
    return cpow_log(std::log(static_cast<double>(n)), -z);
  });

  const std::int64_t m0 = p.N + 1;
  const double log_m = std::log(static_cast<double>(m0));
  CompensatedSum tail;
  tail.add(cpow_log(log_m, 1.0 - z) / (z - 1.0));
  tail.add(0.5 * cpow_log(log_m, -z));
  for (int j = 1; j <= kEmTerms; ++j) {
    const int order = 2 * j - 1;
    tail.add(kBernoulliOverFactorial[j - 1] * rising(z, order) *
             cpow_log(log_m, -z - static_cast<double>(order)));
  }

  EvalResult r;
  r.value = partial + tail.value();
  r.engine = Engine::kDirect;
  r.params = p;
  const int rem = 2 * kEmTerms + 1;
  r.tail_bound = kEmRemainderFactor * std::abs(rising(z, rem)) *
                 std::exp(-(x + rem - 1) * log_m) / (x + rem - 1);
  r.propagated_bound = 8.0 * kEps * (1.0 + kMaxLogN * std::abs(z)) * (1.0 + 1.0 / (x - 1.0));
  r.err_bound = r.tail_bound + r.propagated_bound;
  return r;
}

EvalResult zeta_eq1(Complex z, const PrecisionParams& p, Exec exec) {
  p.validate();
  require_finite(z, "zeta_eq1");
  if (std::abs(z - 1.0) < p.pole_radius || std::abs(z) < p.pole_radius) {
    throw Error(ErrorCode::kPoleProximity, "zeta_eq1 inside an exclusion disc");
  }
  if (!(z.real() > 0.0)) {
    throw Error(ErrorCode::kWrongRegion, "zeta_eq1 needs Re z > 0");
  }
  const SeriesSum s = s_sum(z, p, exec);
  const Complex head = 1.0 + 1.0 / (z - 1.0);
  const Complex body = z * s.value;

  EvalResult r;
  r.value = head - body;
  r.engine = Engine::kEq1;
  r.params = p;
  r.tail_bound = std::abs(z) * s.tail_bound;
  r.propagated_bound = std::abs(z) * s.rounding_bound +
                       4.0 * kEps * (std::abs(head) + std::abs(body) + 1.0);
  r.err_bound = r.tail_bound + r.propagated_bound;
  return r;
}

namespace {

// Evaluates zeta(z + j) with depth K - j for the offsets a level-K call tree
// visits; each offset is computed once.
class LevelKTree {
 public:
  LevelKTree(Complex z, int k, const PrecisionParams& p, Exec exec)
      : z_(z), k_(k), p_(p), exec_(exec) {}

  EvalResult top() { return continuation(0); }

 private:
  const EvalResult& at(int offset) {
    auto& slot = memo_[static_cast<std::size_t>(offset)];
    if (!slot) {
      const Complex w = z_ + static_cast<double>(offset);
      slot = w.real() >= 1.5 ? zeta_direct(w, p_, exec_) : continuation(offset);
    }
    return *slot;
  }

  EvalResult continuation(int offset) {
    const Complex w = z_ + static_cast<double>(offset);
    const int depth = k_ - offset;
    const Complex head = 1.0 + 1.0 / (w - 1.0);
    Complex value = head;
    double magnitude = std::abs(head);
    double propagated = 0.0;

    Complex lower = 1.0;  // (w)_{i-1}
    double fact = 1.0;    // (i+1)!, ends at depth!
    for (int i = 1; i < depth; ++i) {
      fact *= i + 1.0;
      const Complex v = w + static_cast<double>(i);
      const Complex d = v - 1.0;  // the factor (w+i-1) of (w)_i
      Complex term;
      if (std::abs(d) < p_.pole_radius) {
        // (w)_i (zeta(v) - 1) = (w)_{i-1} [(v-1) zeta(v) - (v-1)], Laurent at v = 1
        const Complex residue_part = 1.0 + kEulerGamma * d - kStieltjes1 * d * d;
        term = lower * (residue_part - d) / fact;
        propagated += std::abs(lower) / fact * std::pow(std::abs(d), 3);
      } else if (const Complex coef = lower * d / fact; coef != Complex(0.0, 0.0)) {
        const EvalResult& sub = at(offset + i);
        term = coef * (sub.value - 1.0);
        propagated += std::abs(coef) * sub.err_bound;
      }
      value -= term;
      magnitude += std::abs(term);
      lower *= d;
    }

    // (w)_depth / depth! times the remainder series; skipped when the rising
    // factorial vanishes exactly (w a non-positive integer > -depth).
    const Complex remainder_coef = lower * (w + static_cast<double>(depth - 1)) / fact;
    double tail_bound = 0.0;
    if (remainder_coef != Complex(0.0, 0.0)) {
      const SeriesSum s = level_series(w, depth, p_, exec_);
      const Complex term = remainder_coef * s.value;
      value -= term;
      magnitude += std::abs(term);
      tail_bound = std::abs(remainder_coef) * s.tail_bound;
      propagated += std::abs(remainder_coef) * s.rounding_bound;
    }
    propagated += 4.0 * kEps * magnitude;

    EvalResult r;
    r.value = value;
    r.engine = Engine::kLevelK;
    r.params = p_;
    r.params.K = depth;
    r.tail_bound = tail_bound;
    r.propagated_bound = propagated;
    r.err_bound = tail_bound + propagated;
    return r;
  }

  Complex z_;
  int k_;
  const PrecisionParams& p_;
  Exec exec_;
  std::array<std::optional<EvalResult>, PrecisionParams::kMaxK + 1> memo_{};
};

}  // namespace

EvalResult zeta_levelk(Complex z, const PrecisionParams& p, Exec exec) {
  p.validate();
  require_finite(z, "zeta_levelk");
  if (std::abs(z - 1.0) < p.pole_radius) {
    throw Error(ErrorCode::kPoleProximity, "zeta_levelk inside the pole disc at z = 1");
  }
  if (!(z.real() > 1.0 - p.K)) {
    throw Error(ErrorCode::kWrongRegion,
                "zeta_levelk needs Re z > 1 - K (K = " + std::to_string(p.K) + ")");
  }
  EvalResult r = LevelKTree(z, p.K, p, exec).top();
  if (r.tail_bound > p.tol) {
    throw Error(ErrorCode::kTailTooLarge,
                "level-K remainder bound " + std::to_string(r.tail_bound) + " exceeds tol");
  }
  return r;
}

EvalResult zeta(Complex z, const PrecisionParams& p, Exec exec) {
  p.validate();
  require_finite(z, "zeta");
  if (std::abs(z - 1.0) < p.pole_radius) {
    throw Error(ErrorCode::kPoleProximity, "zeta inside the pole disc at z = 1");
  }
  const double x = z.real();
  if (x >= 1.5) return zeta_direct(z, p, exec);
  if (x > 0.0) {
    if (p.K == 1 && std::abs(z) >= p.pole_radius) return zeta_eq1(z, p, exec);
    PrecisionParams q = p;
    q.K = std::max(p.K, 2);
    return zeta_levelk(z, q, exec);
  }
  const int needed = static_cast<int>(std::ceil(1.0 - x)) + 1;
  PrecisionParams q = p;
  q.K = std::max(p.K, needed);
  if (q.K > PrecisionParams::kMaxK) {
    throw Error(ErrorCode::kWrongRegion, "Re z too negative for the depth cap K <= 12");
  }
  return zeta_levelk(z, q, exec);
}

EvalResult zeta_with(Engine engine, Complex z, const PrecisionParams& p, Exec exec) {
  switch (engine) {
    case Engine::kDirect: return zeta_direct(z, p, exec);
    case Engine::kEq1: return zeta_eq1(z, p, exec);
    case Engine::kLevelK: return zeta_levelk(z, p, exec);
    case Engine::kEtaOracle: return zeta_eta_oracle(z, p);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown engine");
}

double functional_equation_residual(Complex z, const PrecisionParams& p) {
  require_finite(z, "functional_equation_residual");
  const Complex lhs = zeta(z, p).value;
  const Complex reflected = zeta(1.0 - z, p).value;
  const Complex prefactor = 2.0 * cpow_posbase(2.0 * kPi, z - 1.0) * gamma(1.0 - z) *
                            csin(0.5 * kPi * z);
  return std::abs(lhs - prefactor * reflected);
}

}  // namespace critline
