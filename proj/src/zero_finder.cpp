#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "critline/error.hpp"
#include "critline/zero_finder.hpp"

namespace critline {
namespace {

constexpr double kInvPhi = 0.61803398874989484820;
constexpr double kRefineWidth = 1e-9;
constexpr double kReflectThreshold = 1e-3;
constexpr double kMinimumCandidate = 0.1;

int grid_count(double lo, double hi, double step) {
  if (hi < lo) return 0;
  return static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

double char_residual_at(Complex z, const PrecisionParams& p, Exec exec) {
  const SeriesSum s = s_sum(z, p, exec);
  return std::abs((z - 1.0) * s.value - 1.0);
}

double char_envelope(Complex z, double tol) {
  return 10.0 * std::sqrt(tol) * std::max(1.0, std::abs(z - 1.0) / std::abs(z));
}

}  // namespace

std::vector<Bracket> scan_line(double y_min, double y_max, double step,
                               const PrecisionParams& p, double threshold, Exec exec) {
  if (!(y_min >= 0.0 && y_min < y_max) || !std::isfinite(y_max)) {
    throw Error(ErrorCode::kInvalidArgument, "scan_line: need 0 <= y_min < y_max");
  }
  if (!(step > 0.0 && step <= 0.25)) {
    throw Error(ErrorCode::kInvalidArgument, "scan_line: need 0 < step <= 0.25");
  }
  p.validate();
  const int count = grid_count(y_min, y_max, step);
  std::vector<double> g(static_cast<std::size_t>(count));
  for_each_index(exec, count, [&](std::int64_t i) {
    const double y = y_min + static_cast<double>(i) * step;
    g[static_cast<std::size_t>(i)] = std::norm(zeta(Complex(0.5, y), p, Exec::kSerial).value);
  });

  std::vector<Bracket> out;
  for (int i = 1; i + 1 < count; ++i) {
    const double gi = g[static_cast<std::size_t>(i)];
    if (gi < g[static_cast<std::size_t>(i) - 1] && gi < g[static_cast<std::size_t>(i) + 1] &&
        gi < threshold) {
      const double y = y_min + i * step;
      out.push_back({y - step, y, y + step, gi});
    }
  }
  return out;
}

ZeroRecord refine_zero(const Bracket& bracket, const PrecisionParams& p) {
  if (!(bracket.lo < bracket.hi)) {
    throw Error(ErrorCode::kInvalidArgument, "refine_zero: empty bracket");
  }
  p.validate();
  Engine engine = Engine::kEq1;
  const auto g = [&](double y) {
    const EvalResult r = zeta(Complex(0.5, y), p, Exec::kParallel);
    engine = r.engine;
    return std::norm(r.value);
  };

  double a = bracket.lo;
  double b = bracket.hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double gc = g(c);
  double gd = g(d);
  int iterations = 0;
  while (b - a >= kRefineWidth) {
    ++iterations;
    if (gc < gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - kInvPhi * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + kInvPhi * (b - a);
      gd = g(d);
    }
  }

  ZeroRecord rec;
  rec.y = gc < gd ? c : d;
  rec.abs_zeta = std::sqrt(std::min(gc, gd));
  rec.iterations = iterations;
  rec.engine = engine;
  rec.params = p;
  const Complex z(0.5, rec.y);
  if (!(rec.abs_zeta < std::sqrt(p.tol))) {
    throw Error(ErrorCode::kNotAZero,
                "|zeta| = " + std::to_string(rec.abs_zeta) + " at y = " + std::to_string(rec.y));
  }
  rec.char_residual = char_residual_at(z, p, Exec::kParallel);
  if (!(rec.char_residual < char_envelope(z, p.tol))) {
    throw Error(ErrorCode::kNotAZero, "char_residual = " + std::to_string(rec.char_residual));
  }
  PrecisionParams reflect = p;
  reflect.K = std::max(p.K, 2);
  rec.reflect_residual = std::abs(zeta_levelk(1.0 - z, reflect, Exec::kParallel).value);
  return rec;
}

ZeroSearch find_zeros(double y_min, double y_max, double step, const PrecisionParams& p,
                      Exec exec) {
  ZeroSearch out;
  for (const Bracket& b : scan_line(y_min, y_max, step, p, kCandidateThreshold, exec)) {
    try {
      out.records.push_back(refine_zero(b, p));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNotAZero) throw;
      out.rejected.push_back(b);
    }
  }
  std::sort(out.records.begin(), out.records.end(),
            [](const ZeroRecord& l, const ZeroRecord& r) { return l.y < r.y; });
  return out;
}

ScanReport scan_rectangle(double x_min, double x_max, double y_min, double y_max, double dx,
                          double dy, const PrecisionParams& p, bool with_residual, Exec exec) {
  if (!(x_min > 0.0 && x_min <= x_max && x_max < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "scan_rectangle: need 0 < x_min <= x_max < 1");
  }
  if (!(y_min <= y_max) || !std::isfinite(y_min) || !std::isfinite(y_max)) {
    throw Error(ErrorCode::kInvalidArgument, "scan_rectangle: need y_min <= y_max");
  }
  if (!(dx > 0.0 && dy > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "scan_rectangle: steps must be positive");
  }
  p.validate();
  if (1.0 - x_max < p.pole_radius && y_min <= 0.0 && y_max >= 0.0) {
    throw Error(ErrorCode::kPoleProximity, "scan_rectangle: rectangle meets the pole disc");
  }

  ScanReport rep;
  rep.x_min = x_min;
  rep.x_max = x_max;
  rep.y_min = y_min;
  rep.y_max = y_max;
  rep.dx = dx;
  rep.dy = dy;
  rep.nx = grid_count(x_min, x_max, dx);
  rep.ny = grid_count(y_min, y_max, dy);
  const std::int64_t total = static_cast<std::int64_t>(rep.nx) * rep.ny;
  rep.samples.resize(static_cast<std::size_t>(total));
  for_each_index(exec, total, [&](std::int64_t idx) {
    const int i = static_cast<int>(idx / rep.ny);
    const int j = static_cast<int>(idx % rep.ny);
    GridSample& s = rep.samples[static_cast<std::size_t>(idx)];
    s.x = x_min + i * dx;
    s.y = y_min + j * dy;
    const Complex z(s.x, s.y);
    s.abs_zeta = std::abs(zeta(z, p, Exec::kSerial).value);
    s.char_residual = with_residual ? char_residual_at(z, p, Exec::kSerial)
                                    : std::numeric_limits<double>::quiet_NaN();
  });

  const auto at = [&](int i, int j) -> const GridSample& {
    return rep.samples[static_cast<std::size_t>(i) * rep.ny + j];
  };
  const double line_slack = dx * (1.0 + 1e-9);
  for (int i = 0; i < rep.nx; ++i) {
    for (int j = 0; j < rep.ny; ++j) {
      const GridSample& s = at(i, j);
      const bool near_line = std::abs(s.x - 0.5) <= line_slack;
      if (s.abs_zeta < kOffLineThreshold) {
        (near_line ? rep.minima : rep.off_line_violations).push_back(s);
        continue;
      }
      if (i == 0 || j == 0 || i + 1 == rep.nx || j + 1 == rep.ny) continue;
      if (!(s.abs_zeta < kMinimumCandidate)) continue;
      bool is_min = true;
      for (int di = -1; di <= 1 && is_min; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if ((di != 0 || dj != 0) && !(s.abs_zeta < at(i + di, j + dj).abs_zeta)) {
            is_min = false;
            break;
          }
        }
      }
      if (is_min) rep.minima.push_back(s);
    }
  }
  return rep;
}

VerifyReport verify_record(const ZeroRecord& r, const PrecisionParams& p) {
  p.validate();
  VerifyReport rep;
  PrecisionParams alt = p;
  if (r.engine == Engine::kEtaOracle) {
    rep.engine = Engine::kLevelK;
    alt.K = std::max(p.K, 2);
  } else {
    rep.engine = Engine::kEtaOracle;
  }
  const Complex z(0.5, r.y);
  rep.abs_zeta = std::abs(zeta_with(rep.engine, z, alt).value);
  rep.char_residual = char_residual_at(z, p, Exec::kParallel);
  rep.reflect_residual = std::abs(zeta_with(rep.engine, 1.0 - z, alt).value);

  if (!(rep.abs_zeta < std::sqrt(p.tol))) {
    rep.failing = "abs_zeta";
  } else if (!(rep.char_residual < char_envelope(z, p.tol))) {
    rep.failing = "char_residual";
  } else if (!(rep.reflect_residual < kReflectThreshold)) {
    rep.failing = "reflect_residual";
  }
  rep.pass = rep.failing.empty();
  return rep;
}

void require_pass(const VerifyReport& report, const ZeroRecord& r) {
  if (report.pass) return;
  double value = report.abs_zeta;
  if (report.failing == "char_residual") value = report.char_residual;
  if (report.failing == "reflect_residual") value = report.reflect_residual;
  throw Error(ErrorCode::kVerificationFailed, report.failing + " = " + std::to_string(value) +
                                                  " at y = " + std::to_string(r.y));
}

}  // namespace critline
