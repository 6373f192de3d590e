#include "drk/ratfun.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "drk/errors.hpp"

namespace drk {

Poly::Poly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { trim_exact(); }

Poly::Poly(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { trim_exact(); }

Poly Poly::constant(Complex c) { return Poly({c}); }

Poly Poly::monomial(int power, Complex c) {
  std::vector<Complex> v(static_cast<std::size_t>(power) + 1, Complex{});
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::from_roots(std::span<const Complex> roots, Complex lead) {
  std::vector<Complex> v{lead};
  for (Complex r : roots) {
    v.push_back(Complex{});
    for (std::size_t k = v.size() - 1; k > 0; --k) v[k] = v[k - 1] - r * v[k];
    v[0] *= -r;
  }
  return Poly(std::move(v));
}

void Poly::trim_exact() {
  while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
}

Complex Poly::operator[](int k) const noexcept {
  if (k < 0 || k > degree()) return {};
  return coeffs_[static_cast<std::size_t>(k)];
}

Complex Poly::operator()(Complex z) const noexcept {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (degree() < 1) return {};
  std::vector<Complex> v(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Poly(std::move(v));
}

double Poly::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (Complex c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Poly Poly::trimmed(double rel) const {
  const double cut = rel * max_abs_coeff();
  std::vector<Complex> v = coeffs_;
  while (!v.empty() && std::abs(v.back()) <= cut) v.pop_back();
  return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim_exact();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim_exact();
  return *this;
}

Poly& Poly::operator*=(Complex s) {
  for (Complex& c : coeffs_) c *= s;
  trim_exact();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Complex> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(v));
}

Complex poly_eval(const Poly& p, Complex z) noexcept { return p(z); }

namespace {

// Newton steps are only accepted while they shrink |p|; near multiple roots
// the plain iteration can wander off.
Complex polish(const Poly& p, const Poly& dp, Complex z) {
  double res = std::abs(p(z));
  for (int it = 0; it < 3 && res > 0.0; ++it) {
    const Complex d = dp(z);
    if (d == Complex{}) break;
    const Complex next = z - p(z) / d;
    const double next_res = std::abs(p(next));
    if (!(next_res < res)) break;
    z = next;
    res = next_res;
  }
  return z;
}

}  // namespace

std::vector<Complex> poly_roots(const Poly& p, const Tolerances& tol) {
  (void)tol;
  if (p.is_zero()) throw MathError(ErrorCode::ZeroPolynomial, "poly_roots of the zero polynomial");
  std::vector<Complex> roots;
  const auto c = p.coeffs();
  std::size_t low = 0;
  while (c[low] == Complex{}) {
    roots.push_back(Complex{});
    ++low;
  }
  const int n = p.degree() - static_cast<int>(low);
  if (n == 0) return roots;
  const Complex lead = c.back();
  if (n == 1) {
    roots.push_back(-c[low] / lead);
    return roots;
  }
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[low + static_cast<std::size_t>(i)] / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw MathError(ErrorCode::FactorizationFailure, "companion eigenvalue iteration did not converge");
  const Poly dp = p.derivative();
  for (int i = 0; i < n; ++i) roots.push_back(polish(p, dp, solver.eigenvalues()[i]));
  return roots;
}

Poly conj_reciprocal(const Poly& p) {
  std::vector<Complex> v(p.coeffs().rbegin(), p.coeffs().rend());
  for (Complex& x : v) x = std::conj(x);
  return Poly(std::move(v));
}

// RationalFunction ----------------------------------------------------------

RationalFunction::RationalFunction() : num_(), den_(Poly::constant(1.0)), normalized_(true) {}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw MathError(ErrorCode::ZeroDenominator, "rational function with zero denominator");
}

RationalFunction RationalFunction::normalized(const Tolerances& tol) const {
  if (num_.is_zero()) return RationalFunction();
  Poly num = num_;
  Poly den = den_;
  if (num.degree() >= 1 && den.degree() >= 1) {
    std::vector<Complex> nr = poly_roots(num, tol);
    std::vector<Complex> dr = poly_roots(den, tol);
    std::vector<bool> den_used(dr.size(), false);
    std::vector<Complex> num_keep;
    bool cancelled = false;
    for (Complex r : nr) {
      std::size_t best = dr.size();
      double best_dist = 0.0;
      for (std::size_t j = 0; j < dr.size(); ++j) {
        if (den_used[j]) continue;
        const double d = std::abs(r - dr[j]);
        if (best == dr.size() || d < best_dist) {
          best = j;
          best_dist = d;
        }
      }
      if (best < dr.size() && best_dist <= tol.cancel * (1.0 + std::abs(r))) {
        den_used[best] = true;
        cancelled = true;
      } else {
        num_keep.push_back(r);
      }
    }
    if (cancelled) {
      std::vector<Complex> den_keep;
      for (std::size_t j = 0; j < dr.size(); ++j)
        if (!den_used[j]) den_keep.push_back(dr[j]);
      num = Poly::from_roots(num_keep, num.leading());
      den = Poly::from_roots(den_keep, den.leading());
    }
  }
  int low = 0;
  while (den[low] == Complex{}) ++low;
  const Complex scale = 1.0 / den[low];
  RationalFunction out(num * scale, den * scale);
  out.normalized_ = true;
  return out;
}

bool RationalFunction::is_pole(Complex z, double rel) const noexcept {
  double scale = 0.0;
  double zp = 1.0;
  for (Complex c : den_.coeffs()) {
    scale += std::abs(c) * zp;
    zp *= std::abs(z);
  }
  return std::abs(den_(z)) <= rel * scale;
}

Complex RationalFunction::operator()(Complex z) const {
  if (is_pole(z)) throw MathError(ErrorCode::PoleAtPoint, "evaluation at a pole");
  return num_(z) / den_(z);
}

Complex RationalFunction::derivative_at(Complex z) const {
  if (is_pole(z)) throw MathError(ErrorCode::PoleAtPoint, "derivative at a pole");
  const Complex q = den_(z);
  return (num_.derivative()(z) * q - num_(z) * den_.derivative()(z)) / (q * q);
}

RationalFunction rat_derivative(const RationalFunction& r, const Tolerances& tol) {
  const Poly& p = r.num();
  const Poly& q = r.den();
  return RationalFunction(p.derivative() * q - p * q.derivative(), q * q).normalized(tol);
}

// RationalSymbol ------------------------------------------------------------

RationalSymbol RationalSymbol::make(Poly num, Poly den, const Tolerances& tol) {
  return make(RationalFunction(std::move(num), std::move(den)), tol);
}

RationalSymbol RationalSymbol::make(const RationalFunction& f, const Tolerances& tol) {
  RationalFunction g = f.normalized(tol);
  if (g.den().degree() >= 1) {
    for (Complex r : poly_roots(g.den(), tol)) {
      if (std::abs(r) <= 1.0 + tol.pole)
        throw MathError(ErrorCode::InvalidSymbol, "denominator has a root in the closed unit disk");
    }
  }
  double sup = 0.0;
  const int m = std::max(tol.sup_samples, 16);
  for (int j = 0; j < m; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / m;
    sup = std::max(sup, std::abs(g(std::polar(1.0, theta))));
  }
  if (sup > 1.0 + tol.sup)
    throw MathError(ErrorCode::InvalidSymbol, "sup of |b| on the circle exceeds 1");
  return RationalSymbol(std::move(g), sup);
}

DiskPoint::DiskPoint(Complex w) : w_(w) {
  if (!(std::abs(w) < 1.0)) throw MathError(ErrorCode::InvalidArgument, "point outside the open unit disk");
}

}  // namespace drk
