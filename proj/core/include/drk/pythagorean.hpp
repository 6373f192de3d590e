#pragma once

#include "drk/boundary.hpp"
#include "drk/ratfun.hpp"

namespace drk {

/// (a, b) with |a|^2 + |b|^2 = 1 on the circle, a outer with a(0) > 0, and
/// phi = b / a. phi may have poles on the circle (where a vanishes).
struct PythagoreanPair {
  RationalSymbol b;
  RationalSymbol a;
  RationalFunction phi;
  SpectralFactor factor;  // r with a = r / den(b); its circle roots are the contact points of b
};

/// Builds the Pythagorean mate of a non-extreme rational symbol from the
/// Fejer-Riesz factor of |q|^2 - |p|^2. Throws MathError(ExtremeSymbol) for
/// inner b.
PythagoreanPair mate(const RationalSymbol& b, const Tolerances& tol = default_tolerances());

/// Whether num/den (reduced first) is bounded on the disk: false iff some
/// pole satisfies |pole| <= 1 + tol.pole. Throws ZeroDenominator.
bool in_hinfty(const RationalFunction& r, const Tolerances& tol = default_tolerances());

enum class QuotientFailure { None, FirstOverSecond, SecondOverFirst, Both };

struct SpaceEqualityVerdict {
  bool may_be_equal = true;
  QuotientFailure failing = QuotientFailure::None;
  RationalFunction a1_over_a2;
  RationalFunction a2_over_a1;
};

/// Necessary condition for H(b1) = H(b2) on non-extreme symbols: both
/// a1/a2 and a2/a1 must lie in H-infinity. MayBeEqual certifies nothing.
SpaceEqualityVerdict space_equality_necessary(const RationalSymbol& b1, const RationalSymbol& b2,
                                              const Tolerances& tol = default_tolerances());

}  // namespace drk
