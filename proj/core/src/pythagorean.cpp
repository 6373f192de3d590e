#include "drk/pythagorean.hpp"

#include <cmath>

#include "drk/errors.hpp"

namespace drk {

PythagoreanPair mate(const RationalSymbol& b, const Tolerances& tol) {
  if (b.is_zero()) {
    const RationalSymbol one = RationalSymbol::make(Poly::constant(1.0), Poly::constant(1.0), tol);
    SpectralFactor f;
    f.r = Poly::constant(1.0);
    f.scale = 1.0;
    return {b, one, RationalFunction(), f};
  }
  if (is_inner(b)) throw MathError(ErrorCode::ExtremeSymbol, "inner symbols have no Pythagorean mate");

  SpectralFactor f = fejer_riesz_factor(defect_trig_polynomial(b), tol);
  const Complex q0 = b.den()[0];
  const Complex phase = std::conj(q0) / std::abs(q0);
  f.r *= phase;
  f.scale *= phase;

  RationalSymbol a = RationalSymbol::make(f.r, b.den(), tol);
  RationalFunction phi = RationalFunction(b.num(), f.r).normalized(tol);
  return {b, std::move(a), std::move(phi), std::move(f)};
}

bool in_hinfty(const RationalFunction& r, const Tolerances& tol) {
  const RationalFunction g = r.normalized(tol);
  if (g.num().is_zero() || g.den().degree() < 1) return true;
  for (Complex pole : poly_roots(g.den(), tol))
    if (std::abs(pole) <= 1.0 + tol.pole) return false;
  return true;
}

SpaceEqualityVerdict space_equality_necessary(const RationalSymbol& b1, const RationalSymbol& b2,
                                              const Tolerances& tol) {
  const PythagoreanPair m1 = mate(b1, tol);
  const PythagoreanPair m2 = mate(b2, tol);
  const RationalFunction& a1 = m1.a.function();
  const RationalFunction& a2 = m2.a.function();

  SpaceEqualityVerdict v;
  v.a1_over_a2 = RationalFunction(a1.num() * a2.den(), a1.den() * a2.num()).normalized(tol);
  v.a2_over_a1 = RationalFunction(a2.num() * a1.den(), a2.den() * a1.num()).normalized(tol);
  const bool forward = in_hinfty(v.a1_over_a2, tol);
  const bool backward = in_hinfty(v.a2_over_a1, tol);
  if (forward && backward) return v;
  v.may_be_equal = false;
  v.failing = (!forward && !backward) ? QuotientFailure::Both
              : !forward             ? QuotientFailure::FirstOverSecond
                                     : QuotientFailure::SecondOverFirst;
  return v;
}

}  // namespace drk
