#pragma once

namespace drk {

/// Numerical tolerances shared across modules. The defaults are the values
/// the test suites pin; every report echoes the set it was computed with.
struct Tolerances {
  double sup = 1e-10;     // slack when validating sup |b| <= 1 on the circle
  double root = 1e-8;     // residual bound accepted from poly_roots
  double cancel = 1e-7;   // numerator/denominator root matching
  double psd = 1e-10;     // nonnegativity slack for trig polynomials
  double pole = 1e-8;     // poles this close to the circle count as inside
  double unimodular_cluster = 1e-6;
  double snap = 1e-7;     // unimodular roots are snapped onto the circle
  double divergence_cutoff = -40.0;
  int sup_samples = 4096;
};

inline const Tolerances& default_tolerances() {
  static const Tolerances t{};
  return t;
}

}  // namespace drk
