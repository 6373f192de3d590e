#pragma once

// Analysis on the unit circle: quadrature, the extreme-point test, Fejer-Riesz
// spectral factorization and outer functions built from boundary modulus.

#include <functional>
#include <optional>
#include <vector>

#include "drk/ratfun.hpp"

namespace drk {

/// Hermitian Laurent polynomial sum_{k=-n}^{n} c_k e^{ik theta}; real on the
/// circle. Storage index k + n.
class TrigPolynomial {
 public:
  /// coeffs holds c_{-n} .. c_n (odd length). Throws MathError(InvalidArgument)
  /// unless c_{-k} == conj(c_k) to 1e-12 of the largest coefficient.
  explicit TrigPolynomial(std::vector<Complex> coeffs);

  /// |s(e^{i theta})|^2 as a trig polynomial of degree deg(s).
  static TrigPolynomial abs_squared(const Poly& s);

  int degree() const noexcept { return n_; }
  Complex coeff(int k) const noexcept;
  const std::vector<Complex>& coeffs() const noexcept { return c_; }
  double operator()(double theta) const noexcept;
  /// Minimum over 8n + 16 equispaced samples.
  double sampled_min() const;
  double max_abs_coeff() const noexcept;
  /// Top-degree pairs with modulus <= rel * max_abs_coeff() removed.
  TrigPolynomial trimmed(double rel) const;

  friend TrigPolynomial operator-(const TrigPolynomial& a, const TrigPolynomial& b);

 private:
  int n_ = 0;
  std::vector<Complex> c_;
};

/// 1 - |b|^2 on the circle times |den|^2, i.e. |q|^2 - |p|^2 for b = p/q.
TrigPolynomial defect_trig_polynomial(const RationalSymbol& b);

/// Real samples of a circle function at theta_j = 2 pi j / M, M a power of
/// two >= 16. When built from a function the sampler can be refined.
class BoundarySampler {
 public:
  static BoundarySampler from_values(std::vector<double> values);
  static BoundarySampler from_function(std::function<double(double)> f, int m);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  double theta(int j) const noexcept;
  const std::vector<double>& values() const noexcept { return values_; }

 private:
  BoundarySampler() = default;
  std::vector<double> values_;
};

/// Complex boundary samples of a symbol b (non-rational input path).
class SampledSymbol {
 public:
  static SampledSymbol from_values(std::vector<Complex> values);
  static SampledSymbol from_function(std::function<Complex(double)> f, int m);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  const std::vector<Complex>& values() const noexcept { return values_; }
  bool refinable() const noexcept { return static_cast<bool>(source_); }
  /// Same function on 2M nodes; requires refinable().
  SampledSymbol refined() const;
  /// Every other node (M/2 nodes); requires M >= 32.
  SampledSymbol coarsened() const;

 private:
  SampledSymbol() = default;
  std::vector<Complex> values_;
  std::function<Complex(double)> source_;
};

/// Rectangle-rule mean; exact for trig polynomials of degree < M/2.
double circle_mean(const BoundarySampler& s);

struct ExtremeVerdict {
  bool extreme = false;
  std::optional<double> integral;  // value of the log integral when finite
  bool exact = true;               // false for the sampled heuristic
};

/// True when |num| == |den| on the circle, i.e. b is a finite Blaschke
/// product times a unimodular constant.
bool is_inner(const RationalSymbol& b);

/// For rational b: Extreme iff inner, otherwise the value of the integral of
/// log(1 - |b|^2) over the circle (normalized measure), integrated with
/// tanh-sinh refinement on the arcs between the contact points |b| = 1.
ExtremeVerdict extreme_test(const RationalSymbol& b, const Tolerances& tol = default_tolerances());

/// Heuristic verdict for sampled symbols: Extreme when the rectangle-rule
/// value is below tol.divergence_cutoff and does not increase under node
/// doubling (or, for fixed data, compared with the halved grid).
/// Throws MathError(InvalidSymbol) if some |b| exceeds 1 + tol.sup.
ExtremeVerdict extreme_test(const SampledSymbol& b, const Tolerances& tol = default_tolerances());

/// The quadrature behind extreme_test for non-inner rational b.
double log_defect_integral(const RationalSymbol& b, const Tolerances& tol = default_tolerances());

/// Outer polynomial factor r with |r|^2 = t on the circle, plus the root data
/// it was assembled from.
struct SpectralFactor {
  Poly r;
  Complex scale;                    // r = scale * prod (z - root)
  std::vector<Complex> roots;       // |root| >= 1, with multiplicity
  std::vector<Complex> off_circle;  // the roots with |root| > 1
  std::vector<Complex> contact;     // distinct unimodular roots of r
  std::vector<int> contact_multiplicity;
};

/// Fejer-Riesz factorization of a nonnegative trig polynomial: roots of
/// z^n t(z) are paired (lambda, 1/conj(lambda)); the outer half goes to r,
/// unimodular clusters are split evenly, r(0) is made real positive.
/// Throws NotNonnegative, OddUnimodularMultiplicity, FactorizationFailure.
SpectralFactor fejer_riesz_factor(const TrigPolynomial& t, const Tolerances& tol = default_tolerances());
Poly fejer_riesz(const TrigPolynomial& t, const Tolerances& tol = default_tolerances());

/// exp of the Herglotz integral of (1/2) log w: the outer function with
/// modulus sqrt(w) on the circle, positive at 0. Samples equal to -inf
/// (zeros of w on a node) get the punctured-rule correction for a log
/// singularity. Throws MathError(DivergentLogIntegral) when the mean of
/// log w is below tol.divergence_cutoff or no sample is finite.
Complex outer_from_modulus(const BoundarySampler& logw, DiskPoint z,
                           const Tolerances& tol = default_tolerances());

}  // namespace drk
