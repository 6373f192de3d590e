#pragma once

#include <vector>

#include "drk/ratfun.hpp"

namespace drk {

/// A boundary point zeta where b has a Caratheodory angular derivative:
/// |b(zeta)| = 1 and c = zeta b'(zeta) conj(b(zeta)) > 0.
struct AdcPoint {
  Complex zeta;
  double c;
  Complex b_at_zeta;
};

/// Contact points of a rational, non-inner b, found algebraically as the
/// circle roots of the Fejer-Riesz factor of 1 - |b|^2 and refined by Newton
/// on the derivative of that trig polynomial. Sorted by argument.
/// Throws MathError(InnerSymbol) for inner b.
std::vector<AdcPoint> adc_points(const RationalSymbol& b, const Tolerances& tol = default_tolerances());

/// zeta b'(zeta) conj(b(zeta)). Throws MathError(NotContactPoint) when
/// |b(zeta)| differs from 1 by more than 1e-8 or the value is not real to
/// 1e-8 relative.
double adc_value(const RationalSymbol& b, Complex zeta);

/// (1 - |b(r zeta)|^2) / (1 - r^2).
double radial_quotient(const RationalSymbol& b, Complex zeta, double r);

/// Whether b1 and b2 have the same contact-point sets (matched to 1e-8).
/// false certifies that S_b1 and S_b2 are not unitarily equivalent.
bool same_adc(const RationalSymbol& b1, const RationalSymbol& b2, const Tolerances& tol = default_tolerances());

}  // namespace drk
