#include "critline/numerics.hpp"

#include <cmath>
#include <string>

#include "critline/error.hpp"

namespace critline {

std::string_view to_string(RegionLabel label) {
  switch (label) {
    case RegionLabel::kCriticalLine: return "CRITICAL_LINE";
    case RegionLabel::kB1: return "B1";
    case RegionLabel::kB2: return "B2";
    case RegionLabel::kClosedStripBoundary: return "CLOSED_STRIP_BOUNDARY";
    case RegionLabel::kOutsideStrip: return "OUTSIDE_STRIP";
    case RegionLabel::kPole: return "POLE";
    case RegionLabel::kZeroPoint: return "ZERO_POINT";
  }
  return "UNKNOWN";
}

RegionLabel classify_region(Complex z) {
  require_finite(z, "classify_region");
  const double x = z.real();
  const double y = z.imag();
  if (x == 1.0 && y == 0.0) return RegionLabel::kPole;
  if (x == 0.0 && y == 0.0) return RegionLabel::kZeroPoint;
  if (x == 0.5) return RegionLabel::kCriticalLine;
  if (x > 0.0 && x < 0.5) return RegionLabel::kB1;
  if (x > 0.5 && x < 1.0) return RegionLabel::kB2;
  if (x == 0.0 || x == 1.0) return RegionLabel::kClosedStripBoundary;
  return RegionLabel::kOutsideStrip;
}

void require_finite(Complex z, std::string_view what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + ": non-finite complex argument");
  }
}

Complex cpow_posbase(double base, Complex z) {
  if (!(base > 0.0) || !std::isfinite(base)) {
    throw Error(ErrorCode::kInvalidArgument,
                "cpow_posbase: base must be positive and finite");
  }
  require_finite(z, "cpow_posbase");
  return cpow_log(std::log(base), z);
}

Complex expm1_over(Complex w) {
  const double r = std::abs(w);
  if (r < 1e-4) {
    // Taylor tail is below 1e-20 relative at this radius.
    return 1.0 + w * (0.5 + w * (1.0 / 6.0 + w * (1.0 / 24.0 + w / 120.0)));
  }
  const double a = w.real();
  const double b = w.imag();
  const double half_sin = std::sin(0.5 * b);
  const double em1 = std::expm1(a);
  // e^{a+ib} - 1 = (expm1(a) cos b - 2 sin^2(b/2)) + i e^a sin b
  const Complex num{em1 * std::cos(b) - 2.0 * half_sin * half_sin,
                    (em1 + 1.0) * std::sin(b)};
  return num / w;
}

Complex kahan_sum(std::span<const Complex> terms) {
  CompensatedSum acc;
  for (const Complex& t : terms) acc.add(t);
  return acc.value();
}

}  // namespace critline
