#include "drk/adc.hpp"

#include <algorithm>
#include <cmath>

#include "drk/boundary.hpp"
#include "drk/errors.hpp"

namespace drk {

namespace {

// t has a double zero at a contact angle, so t' has a simple one there.
double refine_contact_angle(const TrigPolynomial& t, double theta) {
  for (int it = 0; it < 4; ++it) {
    double d1 = 0.0;
    double d2 = 0.0;
    for (int k = 1; k <= t.degree(); ++k) {
      const Complex e = t.coeff(k) * std::polar(1.0, k * theta);
      d1 += -2.0 * k * e.imag();
      d2 += -2.0 * k * k * e.real();
    }
    if (d2 == 0.0) break;
    const double step = d1 / d2;
    if (!(std::abs(step) < 1e-4)) break;
    theta -= step;
  }
  return theta;
}

}  // namespace

double adc_value(const RationalSymbol& b, Complex zeta) {
  const Complex bz = b(zeta);
  if (std::abs(std::abs(bz) - 1.0) > 1e-8)
    throw MathError(ErrorCode::NotContactPoint, "|b(zeta)| is not 1");
  const Complex c = zeta * b.derivative_at(zeta) * std::conj(bz);
  if (std::abs(c.imag()) > 1e-8 * std::max(std::abs(c), 1e-300))
    throw MathError(ErrorCode::NotContactPoint, "angular derivative value is not real");
  return c.real();
}

std::vector<AdcPoint> adc_points(const RationalSymbol& b, const Tolerances& tol) {
  if (is_inner(b)) throw MathError(ErrorCode::InnerSymbol, "inner symbols have a contact point at every boundary point");
  if (b.is_zero()) return {};
  const TrigPolynomial t = defect_trig_polynomial(b);
  const SpectralFactor f = fejer_riesz_factor(t, tol);
  std::vector<AdcPoint> out;
  for (Complex z : f.contact) {
    const Complex zeta = std::polar(1.0, refine_contact_angle(t, std::arg(z)));
    out.push_back({zeta, adc_value(b, zeta), b(zeta)});
  }
  std::sort(out.begin(), out.end(),
            [](const AdcPoint& x, const AdcPoint& y) { return std::arg(x.zeta) < std::arg(y.zeta); });
  return out;
}

double radial_quotient(const RationalSymbol& b, Complex zeta, double r) {
  return (1.0 - std::norm(b(r * zeta))) / (1.0 - r * r);
}

bool same_adc(const RationalSymbol& b1, const RationalSymbol& b2, const Tolerances& tol) {
  const auto s1 = adc_points(b1, tol);
  const auto s2 = adc_points(b2, tol);
  if (s1.size() != s2.size()) return false;
  auto covered = [](const std::vector<AdcPoint>& xs, const std::vector<AdcPoint>& ys) {
    return std::all_of(xs.begin(), xs.end(), [&](const AdcPoint& x) {
      return std::any_of(ys.begin(), ys.end(),
                         [&](const AdcPoint& y) { return std::abs(x.zeta - y.zeta) <= 1e-8; });
    });
  };
  return covered(s1, s2) && covered(s2, s1);
}

}  // namespace drk
