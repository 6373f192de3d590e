#pragma once

#include <functional>

#include "drk/pythagorean.hpp"
#include "drk/ratfun.hpp"

namespace drk {

/// Szego kernel k_w(z) = 1 / (1 - conj(w) z).
Complex szego(DiskPoint w, DiskPoint z);

/// de Branges-Rovnyak kernel k^b_w(z) = (1 - conj(b(w)) b(z)) / (1 - conj(w) z).
Complex kb_eval(const RationalSymbol& b, DiskPoint w, DiskPoint z);

/// ||k^b_w||_b^2 = (1 - |b(w)|^2) / (1 - |w|^2).
double norm_kb_sq(const RationalSymbol& b, DiskPoint w);

/// ||k_w||_b^2 = (1 + |phi(w)|^2) / (1 - |w|^2) for the pair's phi = b / a.
double norm_cauchy_sq(const PythagoreanPair& pair, DiskPoint w);

enum class SectionOperator { Xb, SbStar };

/// Holomorphic eigen-section at base point w. For Xb the section is
/// k_{conj w}; for SbStar it is k^b_{conj w}. norm_sq is the squared
/// H(b)-norm of the section, i.e. the closed forms above taken at conj(w).
struct CrossSection {
  SectionOperator op;
  DiskPoint base;
  std::function<Complex(Complex)> section;
  double norm_sq;
  bool ill_conditioned;  // |w| > 0.99
};

CrossSection cross_section(const PythagoreanPair& pair, DiskPoint w);  // Xb
CrossSection cross_section(const RationalSymbol& b, DiskPoint w);      // SbStar
/// Dispatching form. For Xb a mate is built; throws MathError(ExtremeSymbol)
/// when b is inner.
CrossSection cross_section(SectionOperator op, const RationalSymbol& b, DiskPoint w,
                           const Tolerances& tol = default_tolerances());

}  // namespace drk
