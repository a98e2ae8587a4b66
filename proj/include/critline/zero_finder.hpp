#pragma once

#include <string>
#include <vector>

#include "critline/zeta.hpp"

namespace critline {

/// Sample triple around a discrete local minimum of |zeta(1/2 + iy)|^2.
struct Bracket {
  double lo = 0.0;
  double mid = 0.0;
  double hi = 0.0;
  double g_mid = 0.0;
};

struct ZeroRecord {
  double y = 0.0;
  double abs_zeta = 0.0;
  double char_residual = 0.0;     // |R(1/2 + iy)|
  double reflect_residual = 0.0;  // |zeta(1 - rho)|
  int iterations = 0;
  Engine engine = Engine::kEq1;
  PrecisionParams params;

  bool operator==(const ZeroRecord&) const = default;
};

inline constexpr double kCandidateThreshold = 1e-2;

/// Samples g(y) = |zeta(1/2 + iy)|^2 at y_min + i step and returns every
/// interior sample with g below both neighbours and below `threshold`.
/// Needs 0 <= y_min < y_max and 0 < step <= 0.25.
std::vector<Bracket> scan_line(double y_min, double y_max, double step,
                               const PrecisionParams& p,
                               double threshold = kCandidateThreshold,
                               Exec exec = Exec::kParallel);

/// Golden-section search on g inside [lo, hi] down to width 1e-9, then the
/// acceptance test abs_zeta < sqrt(tol), char_residual < 10 sqrt(tol) max(1, |z-1|/|z|).
/// Throws Error(kNotAZero) when the minimum does not pass.
ZeroRecord refine_zero(const Bracket& bracket, const PrecisionParams& p);

struct ZeroSearch {
  std::vector<ZeroRecord> records;   // sorted by y
  std::vector<Bracket> rejected;     // brackets whose refinement was not a zero
};

/// scan_line followed by refine_zero on each bracket.
ZeroSearch find_zeros(double y_min, double y_max, double step, const PrecisionParams& p,
                      Exec exec = Exec::kParallel);

struct GridSample {
  double x = 0.0;
  double y = 0.0;
  double abs_zeta = 0.0;
  double char_residual = 0.0;  // NaN unless requested
};

struct ScanReport {
  double x_min = 0.0, x_max = 0.0, y_min = 0.0, y_max = 0.0;
  double dx = 0.0, dy = 0.0;
  int nx = 0, ny = 0;
  std::vector<GridSample> samples;  // x-major, then y
  std::vector<GridSample> minima;
  std::vector<GridSample> off_line_violations;
};

inline constexpr double kOffLineThreshold = 1e-3;

/// |zeta| on the grid x_min + i dx, y_min + j dy. Minima are interior
/// 8-neighbour local minima with |zeta| < 0.1 plus every point with
/// |zeta| < 1e-3 within dx of the line; a point with |zeta| < 1e-3 further
/// out is a violation. Needs 0 < x_min <= x_max < 1 and y_min <= y_max.
ScanReport scan_rectangle(double x_min, double x_max, double y_min, double y_max, double dx,
                          double dy, const PrecisionParams& p, bool with_residual = false,
                          Exec exec = Exec::kParallel);

struct VerifyReport {
  bool pass = false;
  double abs_zeta = 0.0;
  double char_residual = 0.0;
  double reflect_residual = 0.0;
  Engine engine = Engine::kEtaOracle;  // engine used for the recomputation
  std::string failing;                 // name of the first failing quantity
};

/// Recomputes the record with a different engine than r.engine and checks
/// abs_zeta < sqrt(tol), the char_residual envelope and reflect_residual < 1e-3.
VerifyReport verify_record(const ZeroRecord& r, const PrecisionParams& p);

/// Throws Error(kVerificationFailed) naming the failing quantity.
void require_pass(const VerifyReport& report, const ZeroRecord& r);

}  // namespace critline
