#pragma once

#include <cstdint>

#include "critline/zeta.hpp"

namespace critline {

/// R(z) = (z-1) S(z) - 1 next to the dispatcher value of zeta(z).
struct CharacterizationResult {
  Complex z;
  Complex s_value;
  Complex residual;      // R(z)
  Complex zeta_value;
  double identity_gap = 0.0;  // |R(z) + (z-1) zeta(z) / z|
  double gap_bound = 0.0;     // propagated engine error of the gap
};

/// Requires Re z > 0 and z outside the pole discs of 0 and 1.
CharacterizationResult characterization_residual(Complex z, const PrecisionParams& p,
                                                 Exec exec = Exec::kParallel);

struct Lemma1Report {
  bool antecedent = false;   // |z S(z) - 1| < p.tol
  bool holds = false;        // antecedent implies the conclusion
  double antecedent_value = 0.0;  // |z S(z) - 1|
  double conclusion_value = 0.0;  // |(z-1) zeta(z) - 1|
  double conclusion_bound = 0.0;
};

/// Checks  z S(z) = 1  =>  (z-1) zeta(z) = 1  at one point.
Lemma1Report lemma1_check(Complex z, const PrecisionParams& p, Exec exec = Exec::kParallel);

/// The unique alpha with alpha z (z-1) = 1. Rejects z = 0 and z = 1.
Complex lemma2_alpha(Complex z);

/// Im(z (z-1)) = y (2x - 1); zero exactly on Re z = 1/2.
double critical_line_indicator(Complex z);

struct ApproxQuality {
  double abs_error = 0.0;  // |I_n(z) - 1/(n(n+1))|
  double ratio = 0.0;      // |I_n(z)| n (n+1)
};

/// Compares I_n(z) = int_0^1 t dt/(n+t)^{z+1} with 1/(n(n+1)).
ApproxQuality approx_quality(std::int64_t n, Complex z);

}  // namespace critline
