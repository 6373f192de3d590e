#pragma once

// Dense complex polynomials and rational functions. Everything downstream
// (symbols, mates, Taylor data) is expressed through these two types.

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

#include "drk/config.hpp"

namespace drk {

using Complex = std::complex<double>;

/// Polynomial in z with complex coefficients; coeffs()[k] multiplies z^k.
/// The zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Complex> coeffs);
  Poly(std::initializer_list<Complex> coeffs);

  static Poly constant(Complex c);
  static Poly monomial(int power, Complex c = 1.0);
  /// lead * prod (z - r) over the given roots.
  static Poly from_roots(std::span<const Complex> roots, Complex lead = 1.0);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of z^k; zero outside [0, degree].
  Complex operator[](int k) const noexcept;
  Complex leading() const noexcept { return is_zero() ? Complex{} : coeffs_.back(); }

  Complex operator()(Complex z) const noexcept;
  Poly derivative() const;
  double max_abs_coeff() const noexcept;
  /// Drops trailing coefficients with modulus <= rel * max_abs_coeff().
  Poly trimmed(double rel) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(Complex s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, Complex s) { return a *= s; }
  friend Poly operator*(Complex s, Poly a) { return a *= s; }

 private:
  void trim_exact();
  std::vector<Complex> coeffs_;
};

Complex poly_eval(const Poly& p, Complex z) noexcept;

/// All deg(p) roots with multiplicity: companion-matrix eigenvalues, then
/// guarded Newton polishing. Exact zero roots are split off first.
/// Throws MathError(ZeroPolynomial) for p == 0.
std::vector<Complex> poly_roots(const Poly& p, const Tolerances& tol = default_tolerances());

/// z^deg(p) * conj(p(1/conj(z))): coefficients reversed and conjugated.
Poly conj_reciprocal(const Poly& p);

/// Quotient num/den of polynomials. Not necessarily bounded; used for Phi,
/// derivatives, and the quotients tested for H-infinity membership.
class RationalFunction {
 public:
  RationalFunction();  // the zero function 0/1
  /// Throws MathError(ZeroDenominator) when den == 0. Does not cancel.
  RationalFunction(Poly num, Poly den);

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  bool is_normalized() const noexcept { return normalized_; }

  /// Common roots (within tol.cancel) removed, and the denominator scaled so
  /// its lowest-order nonzero coefficient is 1.
  RationalFunction normalized(const Tolerances& tol = default_tolerances()) const;

  /// Throws MathError(PoleAtPoint) when den(z) vanishes relative to its scale.
  Complex operator()(Complex z) const;
  Complex derivative_at(Complex z) const;
  bool is_pole(Complex z, double rel = 1e-12) const noexcept;
  bool is_constant() const noexcept { return num_.degree() <= 0 && den_.degree() == 0; }

 private:
  Poly num_;
  Poly den_;
  bool normalized_ = false;
};

/// (p'q - pq') / q^2, normalized.
RationalFunction rat_derivative(const RationalFunction& r,
                                const Tolerances& tol = default_tolerances());

/// A rational b in the closed unit ball of H-infinity: denominator free of
/// roots in the closed disk, sup over the circle of |b| at most 1 + tol.sup.
class RationalSymbol {
 public:
  /// Normalizes and validates; throws MathError(InvalidSymbol) on violation
  /// and MathError(ZeroDenominator) for den == 0.
  static RationalSymbol make(Poly num, Poly den, const Tolerances& tol = default_tolerances());
  static RationalSymbol make(const RationalFunction& f,
                             const Tolerances& tol = default_tolerances());

  const RationalFunction& function() const noexcept { return f_; }
  const Poly& num() const noexcept { return f_.num(); }
  const Poly& den() const noexcept { return f_.den(); }
  Complex operator()(Complex z) const { return f_(z); }
  Complex derivative_at(Complex z) const { return f_.derivative_at(z); }
  /// Max of |b| over the validation samples.
  double sampled_sup() const noexcept { return sup_; }
  bool is_zero() const noexcept { return f_.num().is_zero(); }

 private:
  explicit RationalSymbol(RationalFunction f, double sup) : f_(std::move(f)), sup_(sup) {}
  RationalFunction f_;
  double sup_;
};

/// A point of the open unit disk.
class DiskPoint {
 public:
  /// Throws MathError(InvalidArgument) unless |w| < 1.
  explicit DiskPoint(Complex w);
  Complex value() const noexcept { return w_; }
  DiskPoint conj() const { return DiskPoint(std::conj(w_)); }

 private:
  Complex w_;
};

}  // namespace drk
