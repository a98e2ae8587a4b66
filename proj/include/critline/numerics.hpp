#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <string_view>

namespace critline {

using Complex = std::complex<double>;

/// Where a point sits relative to the critical strip 0 <= Re z <= 1.
///
/// B1 and B2 are the open half-strips left and right of the critical line;
/// the strip edges Re z = 0 and Re z = 1 are CLOSED_STRIP_BOUNDARY except for
/// the two special points z = 0 and z = 1.
enum class RegionLabel {
  kCriticalLine,
  kB1,
  kB2,
  kClosedStripBoundary,
  kOutsideStrip,
  kPole,
  kZeroPoint,
};

std::string_view to_string(RegionLabel label);

/// Total classification by exact comparison on Re z. Callers that need a
/// tolerance around the critical line apply it themselves.
RegionLabel classify_region(Complex z);

/// Throws Error(kInvalidArgument) when either component is NaN or infinite.
void require_finite(Complex z, std::string_view what);

/// base^z = exp(z log base) for a positive real base.
Complex cpow_posbase(double base, Complex z);

/// exp(z * log_base); the hot-path form when log(base) is already known.
inline Complex cpow_log(double log_base, Complex z) {
  const double mag = std::exp(z.real() * log_base);
  const double phase = z.imag() * log_base;
  return {mag * std::cos(phase), mag * std::sin(phase)};
}

/// (e^w - 1) / w without cancellation for small |w|; equals 1 at w = 0.
Complex expm1_over(Complex w);

/// Neumaier-compensated accumulator over complex terms (componentwise).
class CompensatedSum {
 public:
  void add(Complex term) {
    add_component(re_, re_c_, term.real());
    add_component(im_, im_c_, term.imag());
  }
  CompensatedSum& operator+=(Complex term) {
    add(term);
    return *this;
  }
  Complex value() const { return {re_ + re_c_, im_ + im_c_}; }

 private:
  static void add_component(double& sum, double& carry, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      carry += (sum - t) + x;
    } else {
      carry += (x - t) + sum;
    }
    sum = t;
  }

  double re_ = 0.0;
  double re_c_ = 0.0;
  double im_ = 0.0;
  double im_c_ = 0.0;
};

/// Compensated sum of a sequence; the empty sum is 0.
Complex kahan_sum(std::span<const Complex> terms);

/// Principal value Log(Gamma(z)) (imaginary part in (-pi, pi]).
///
/// Lanczos approximation (g = 7, nine coefficients) for Re z >= 1/2 and the
/// reflection formula below that. Throws Error(kPoleOfGamma) at 0, -1, -2, ...
Complex log_gamma(Complex z);

/// Gamma(z) = exp(log_gamma(z)).
Complex gamma(Complex z);

/// Complex sine; thin wrapper kept for call-site readability.
inline Complex csin(Complex z) { return std::sin(z); }

/// Euler-Mascheroni constant and the first Stieltjes constant, used by the
/// Laurent expansion (w - 1) zeta(w) = 1 + g0 (w - 1) - g1 (w - 1)^2 + ...
inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr double kStieltjes1 = -0.07281584548367672486;
inline constexpr double kPi = 3.14159265358979323846;

}  // namespace critline
