#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

#include "critline/criteria.hpp"
#include "critline/error.hpp"
#include "critline/quadrature.hpp"
#include "report_detail.hpp"

namespace critline {
namespace {

constexpr double kRidge = 1e-12;
constexpr double kBreakpointGap = 1e-15;

double frac(double x) { return x - std::floor(x); }

void validate_alphas(std::span<const double> alphas) {
  if (alphas.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "nyman_beurling: empty alpha set");
  }
  for (double a : alphas) {
    if (!(a > 0.0 && a < 1.0)) {
      throw Error(ErrorCode::kAlphaOutOfRange, "alpha = " + std::to_string(a));
    }
  }
  std::vector<double> sorted(alphas.begin(), alphas.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kInvalidArgument, "nyman_beurling: alphas must be distinct");
  }
}

// Discontinuities of {1/t} and {alpha/t} inside (t_min, 1), plus t_min itself.
std::vector<double> breakpoints(std::span<const double> alphas, double t_min) {
  std::vector<double> pts{t_min};
  for (std::int64_t m = 2; 1.0 / static_cast<double>(m) > t_min; ++m) {
    pts.push_back(1.0 / static_cast<double>(m));
  }
  for (double a : alphas) {
    for (std::int64_t m = 1; a / static_cast<double>(m) > t_min; ++m) {
      pts.push_back(a / static_cast<double>(m));
    }
  }
  std::sort(pts.begin(), pts.end());
  std::vector<double> out;
  for (double t : pts) {
    if (!(t > 0.0 && t < 1.0)) continue;
    if (out.empty() || t - out.back() >= kBreakpointGap) out.push_back(t);
  }
  return out;
}

}  // namespace

double nyman_beurling_function(double alpha, double t) {
  return frac(alpha / t) - alpha * frac(1.0 / t);
}

double nyman_beurling_piecewise(double alpha, double t) {
  return alpha * std::floor(1.0 / t) - std::floor(alpha / t);
}

NymanBeurlingResult nyman_beurling_solve(std::span<const double> alphas,
                                         std::int64_t quad_breakpoint_cap, Exec exec) {
  validate_alphas(alphas);
  if (quad_breakpoint_cap < 2) {
    throw Error(ErrorCode::kInvalidArgument, "nyman_beurling: breakpoint cap must be >= 2");
  }
  const double t_min = 1.0 / static_cast<double>(quad_breakpoint_cap);
  const std::vector<double> bp = breakpoints(alphas, t_min);
  const auto count = static_cast<int>(alphas.size());

  const auto basis = [&](int k, double t) {
    return t < t_min ? 0.0 : nyman_beurling_piecewise(alphas[static_cast<std::size_t>(k)], t);
  };

  // Upper triangle of the Gram matrix plus the moment vector, one entry per task.
  std::vector<std::pair<int, int>> entries;
  for (int j = 0; j < count; ++j) {
    entries.emplace_back(j, -1);
    for (int k = j; k < count; ++k) entries.emplace_back(j, k);
  }
  std::vector<double> values(entries.size());
  for_each_index(exec, static_cast<std::int64_t>(entries.size()), [&](std::int64_t e) {
    const auto [j, k] = entries[static_cast<std::size_t>(e)];
    const Integrand f = [&, j = j, k = k](double t) -> Complex {
      return basis(j, t) * (k < 0 ? (t < t_min ? 0.0 : 1.0) : basis(k, t));
    };
    values[static_cast<std::size_t>(e)] = integrate_01(f, bp).real();
  });

  Eigen::MatrixXd gram(count, count);
  Eigen::VectorXd moments(count);
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const auto [j, k] = entries[e];
    if (k < 0) {
      moments(j) = values[e];
    } else {
      gram(j, k) = values[e];
      gram(k, j) = values[e];
    }
  }
  gram.diagonal().array() += kRidge;
  const Eigen::LLT<Eigen::MatrixXd> llt(gram);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::kSingularGram, "Gram matrix is not positive definite");
  }
  const Eigen::VectorXd c = llt.solve(moments);
  if (!c.allFinite()) throw Error(ErrorCode::kSingularGram, "non-finite Gram solution");

  NymanBeurlingResult out;
  out.t_min = t_min;
  out.panels = static_cast<int>(bp.size()) + 1;
  out.coefficients.assign(c.data(), c.data() + c.size());
  out.distance = std::sqrt(std::max(0.0, (1.0 - t_min) - moments.dot(c)));
  const double reach = 1.0 + c.cwiseAbs().sum();
  out.bias_bound = t_min * reach * reach;
  return out;
}

double nyman_beurling_residual(std::span<const double> alphas, std::int64_t quad_breakpoint_cap) {
  return nyman_beurling_solve(alphas, quad_breakpoint_cap).distance;
}

std::vector<double> reciprocal_alphas(int count) {
  if (count < 1) throw Error(ErrorCode::kInvalidArgument, "alpha count must be >= 1");
  std::vector<double> out;
  for (int m = 2; m <= count + 1; ++m) out.push_back(1.0 / m);
  return out;
}

CriterionReport nyman_beurling_chain(std::span<const double> alphas, std::span<const int> sizes,
                                     std::int64_t quad_breakpoint_cap) {
  const auto t0 = std::chrono::steady_clock::now();
  CriterionReport rep;
  rep.criterion = "nyman-beurling";
  rep.range_lo = sizes.empty() ? 0 : sizes.front();
  rep.range_hi = sizes.empty() ? 0 : sizes.back();
  bool ok = !sizes.empty();
  double previous = 0.0;
  double min_margin = 0.0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const int size = sizes[i];
    if (size < 1 || static_cast<std::size_t>(size) > alphas.size() ||
        (i > 0 && size <= sizes[i - 1])) {
      throw Error(ErrorCode::kInvalidArgument, "nyman_beurling_chain: sizes must nest");
    }
    const NymanBeurlingResult r =
        nyman_beurling_solve(alphas.first(static_cast<std::size_t>(size)), quad_breakpoint_cap);
    rep.extremal_items.push_back({size, r.distance});
    rep.metrics["distance_" + std::to_string(size)] = r.distance;
    rep.metrics["bias_bound_" + std::to_string(size)] = r.bias_bound;
    ok = ok && r.distance > 0.0;
    const double margin = i == 0 ? r.distance : previous - r.distance;
    min_margin = i == 0 ? margin : std::min(min_margin, margin);
    if (i > 0 && r.distance > previous) ok = false;
    previous = r.distance;
  }
  rep.metrics["t_min"] = 1.0 / static_cast<double>(quad_breakpoint_cap);
  rep.pass = ok;
  rep.min_margin = min_margin;
  rep.wall_time_s = detail::seconds_since(t0);
  return rep;
}

}  // namespace critline
