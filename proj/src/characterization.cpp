#include <cmath>

#include "critline/characterization.hpp"
#include "critline/error.hpp"

namespace critline {

CharacterizationResult characterization_residual(Complex z, const PrecisionParams& p,
                                                 Exec exec) {
  require_finite(z, "characterization_residual");
  const SeriesSum s = s_sum(z, p, exec);
  const EvalResult zeta_r = zeta(z, p, exec);

  CharacterizationResult out;
  out.z = z;
  out.s_value = s.value;
  out.residual = (z - 1.0) * s.value - 1.0;
  out.zeta_value = zeta_r.value;
  out.identity_gap = std::abs(out.residual + (z - 1.0) * zeta_r.value / z);
  const double s_err = s.tail_bound + s.rounding_bound;
  const double scale = std::abs(z - 1.0);
  out.gap_bound = scale * s_err + scale / std::abs(z) * zeta_r.err_bound;
  return out;
}

Lemma1Report lemma1_check(Complex z, const PrecisionParams& p, Exec exec) {
  const CharacterizationResult c = characterization_residual(z, p, exec);
  Lemma1Report r;
  r.antecedent_value = std::abs(z * c.s_value - 1.0);
  r.antecedent = r.antecedent_value < p.tol;
  r.conclusion_value = std::abs((z - 1.0) * c.zeta_value - 1.0);
  // zeta = 1 + 1/(z-1) - z S, so (z-1) zeta - 1 = (z-1)(1 - z S).
  r.conclusion_bound = std::abs(z - 1.0) * (p.tol + c.gap_bound) + 1e-12;
  r.holds = !r.antecedent || r.conclusion_value < r.conclusion_bound;
  return r;
}

Complex lemma2_alpha(Complex z) {
  require_finite(z, "lemma2_alpha");
  if (z == Complex(0.0, 0.0) || z == Complex(1.0, 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "lemma2_alpha: z must not be 0 or 1");
  }
  const double x = z.real();
  const double y = z.imag();
  const Complex w(x * x - x - y * y, y * (2.0 * x - 1.0));
  return 1.0 / w;
}

double critical_line_indicator(Complex z) { return z.imag() * (2.0 * z.real() - 1.0); }

ApproxQuality approx_quality(std::int64_t n, Complex z) {
  const Complex i_n = integral_term(n, z, 1).value;
  const double nn = static_cast<double>(n) * (static_cast<double>(n) + 1.0);
  return {std::abs(i_n - 1.0 / nn), std::abs(i_n) * nn};
}

}  // namespace critline
