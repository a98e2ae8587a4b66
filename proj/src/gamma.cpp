#include <array>
#include <cmath>

#include "critline/error.hpp"
#include "critline/numerics.hpp"

namespace critline {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoef = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kHalfLogTwoPi = 0.91893853320467274178;
constexpr double kLogPi = 1.14472988584940017414;

Complex lanczos_log_gamma(Complex z) {
  z -= 1.0;
  Complex series = kLanczosCoef[0];
  for (std::size_t i = 1; i < kLanczosCoef.size(); ++i) {
    series += kLanczosCoef[i] / (z + static_cast<double>(i));
  }
  const Complex t = z + kLanczosG + 0.5;
  return kHalfLogTwoPi + (z + 0.5) * std::log(t) - t + std::log(series);
}

// Some logarithm of sin(pi z); the caller reduces modulo 2 pi i, so the
// branch is irrelevant. Large |Im z| avoids forming the huge sine directly.
Complex log_sin_pi(Complex z) {
  const Complex i_pi_z = Complex(0.0, kPi) * z;
  if (z.imag() > 20.0) {
    return -i_pi_z + std::log(Complex(0.0, 0.5) * (1.0 - std::exp(2.0 * i_pi_z)));
  }
  if (z.imag() < -20.0) {
    return i_pi_z + std::log(Complex(0.0, -0.5) * (1.0 - std::exp(-2.0 * i_pi_z)));
  }
  return std::log(std::sin(kPi * z));
}

Complex principal(Complex w) {
  double im = std::remainder(w.imag(), 2.0 * kPi);
  if (im <= -kPi) im += 2.0 * kPi;
  return {w.real(), im};
}

}  // namespace

Complex log_gamma(Complex z) {
  require_finite(z, "log_gamma");
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
    throw Error(ErrorCode::kPoleOfGamma, "log_gamma at a non-positive integer");
  }
  if (z.real() >= 0.5) return principal(lanczos_log_gamma(z));
  return principal(kLogPi - log_sin_pi(z) - lanczos_log_gamma(1.0 - z));
}

Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

}  // namespace critline
