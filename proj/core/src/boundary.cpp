#include "drk/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>

#include "drk/errors.hpp"

namespace drk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_power_of_two(int m) { return m > 0 && (m & (m - 1)) == 0; }

void require_grid_size(int m) {
  if (m < 16 || !is_power_of_two(m))
    throw MathError(ErrorCode::InvalidArgument, "boundary grids need M >= 16, a power of two");
}

}  // namespace

// TrigPolynomial ------------------------------------------------------------

TrigPolynomial::TrigPolynomial(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
  if (c_.size() % 2 == 0) throw MathError(ErrorCode::InvalidArgument, "trig polynomial needs 2n+1 coefficients");
  n_ = static_cast<int>(c_.size() / 2);
  const double scale = std::max(1.0, max_abs_coeff());
  for (int k = 0; k <= n_; ++k) {
    if (std::abs(coeff(-k) - std::conj(coeff(k))) > 1e-12 * scale)
      throw MathError(ErrorCode::InvalidArgument, "trig polynomial is not Hermitian");
  }
  // Symmetrize so downstream code sees an exactly Hermitian sequence.
  for (int k = 0; k <= n_; ++k) {
    const Complex avg = 0.5 * (coeff(k) + std::conj(coeff(-k)));
    c_[static_cast<std::size_t>(n_ + k)] = avg;
    c_[static_cast<std::size_t>(n_ - k)] = std::conj(avg);
  }
}

TrigPolynomial TrigPolynomial::abs_squared(const Poly& s) {
  const int n = std::max(s.degree(), 0);
  std::vector<Complex> c(2 * static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Complex acc{};
    for (int j = 0; j + k <= s.degree(); ++j) acc += s[j + k] * std::conj(s[j]);
    c[static_cast<std::size_t>(n + k)] = acc;
    c[static_cast<std::size_t>(n - k)] = std::conj(acc);
  }
  return TrigPolynomial(std::move(c));
}

Complex TrigPolynomial::coeff(int k) const noexcept {
  if (k < -n_ || k > n_) return {};
  return c_[static_cast<std::size_t>(k + n_)];
}

double TrigPolynomial::operator()(double theta) const noexcept {
  double acc = coeff(0).real();
  for (int k = 1; k <= n_; ++k) acc += 2.0 * (coeff(k) * std::polar(1.0, k * theta)).real();
  return acc;
}

double TrigPolynomial::sampled_min() const {
  const int m = 8 * n_ + 16;
  double lo = std::numeric_limits<double>::infinity();
  for (int j = 0; j < m; ++j) lo = std::min(lo, (*this)(kTwoPi * j / m));
  return lo;
}

double TrigPolynomial::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (Complex c : c_) m = std::max(m, std::abs(c));
  return m;
}

TrigPolynomial TrigPolynomial::trimmed(double rel) const {
  const double cut = rel * max_abs_coeff();
  int n = n_;
  while (n > 0 && std::abs(coeff(n)) <= cut) --n;
  std::vector<Complex> c;
  for (int k = -n; k <= n; ++k) c.push_back(coeff(k));
  return TrigPolynomial(std::move(c));
}

TrigPolynomial operator-(const TrigPolynomial& a, const TrigPolynomial& b) {
  const int n = std::max(a.n_, b.n_);
  std::vector<Complex> c;
  for (int k = -n; k <= n; ++k) c.push_back(a.coeff(k) - b.coeff(k));
  return TrigPolynomial(std::move(c));
}

TrigPolynomial defect_trig_polynomial(const RationalSymbol& b) {
  return TrigPolynomial::abs_squared(b.den()) - TrigPolynomial::abs_squared(b.num());
}

// Samplers ------------------------------------------------------------------

BoundarySampler BoundarySampler::from_values(std::vector<double> values) {
  require_grid_size(static_cast<int>(values.size()));
  BoundarySampler s;
  s.values_ = std::move(values);
  return s;
}

BoundarySampler BoundarySampler::from_function(std::function<double(double)> f, int m) {
  require_grid_size(m);
  std::vector<double> v(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) v[static_cast<std::size_t>(j)] = f(kTwoPi * j / m);
  return from_values(std::move(v));
}

double BoundarySampler::theta(int j) const noexcept { return kTwoPi * j / size(); }

SampledSymbol SampledSymbol::from_values(std::vector<Complex> values) {
  require_grid_size(static_cast<int>(values.size()));
  SampledSymbol s;
  s.values_ = std::move(values);
  return s;
}

SampledSymbol SampledSymbol::from_function(std::function<Complex(double)> f, int m) {
  require_grid_size(m);
  SampledSymbol s;
  s.values_.resize(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) s.values_[static_cast<std::size_t>(j)] = f(kTwoPi * j / m);
  s.source_ = std::move(f);
  return s;
}

SampledSymbol SampledSymbol::refined() const {
  if (!source_) throw MathError(ErrorCode::InvalidArgument, "sampled symbol has no generator to refine");
  return from_function(source_, 2 * size());
}

SampledSymbol SampledSymbol::coarsened() const {
  std::vector<Complex> v;
  for (int j = 0; j < size(); j += 2) v.push_back(values_[static_cast<std::size_t>(j)]);
  SampledSymbol s = from_values(std::move(v));
  s.source_ = source_;
  return s;
}

double circle_mean(const BoundarySampler& s) {
  double acc = 0.0;
  for (double v : s.values()) {
    if (!std::isfinite(v)) throw MathError(ErrorCode::InvalidArgument, "circle_mean of non-finite samples");
    acc += v;
  }
  return acc / s.size();
}

namespace {

// log |1 - e^{i theta}|^2
double log_chord_sq(double theta) {
  const double s = 2.0 * std::sin(0.5 * theta);
  return std::log(s * s);
}

// Replaces -inf samples (zeros of w sitting on a node) by the value that makes
// the rectangle rule exact for s * log|1 - e^{i(theta - theta_j)}|^2 plus a
// smooth part; the strength s is read off the neighbouring samples.
std::vector<double> corrected_log_samples(const std::vector<double>& v) {
  const int m = static_cast<int>(v.size());
  const double h = kTwoPi / m;
  std::vector<double> out = v;
  auto at = [&](int j) { return v[static_cast<std::size_t>(((j % m) + m) % m)]; };
  for (int j = 0; j < m; ++j) {
    if (std::isfinite(v[static_cast<std::size_t>(j)])) continue;
    const double n1 = at(j - 1), p1 = at(j + 1), n2 = at(j - 2), p2 = at(j + 2);
    double strength = 1.0;
    double smooth = 0.0;
    if (std::isfinite(n1) && std::isfinite(p1)) {
      const double avg1 = 0.5 * (n1 + p1);
      if (std::isfinite(n2) && std::isfinite(p2)) {
        const double avg2 = 0.5 * (n2 + p2);
        const double est = (avg1 - avg2) / (log_chord_sq(h) - log_chord_sq(2 * h));
        strength = std::max(1.0, std::round(est));
      }
      smooth = avg1 - strength * log_chord_sq(h);
    } else {
      // Neighbourhood is itself singular; leave the node to the caller.
      continue;
    }
    out[static_cast<std::size_t>(j)] = smooth - strength * 2.0 * std::log(static_cast<double>(m));
  }
  return out;
}

struct LogSingularity {
  double theta;
  int strength;
};

// Least-squares misfit of v near node j against
// k * log|e^{it} - e^{i t0}|^2 + quadratic.
double singularity_misfit(const std::vector<double>& v, int j, int k, double t0, double h) {
  const int m = static_cast<int>(v.size());
  constexpr int kHalf = 4;
  Eigen::Matrix<double, 2 * kHalf + 1, 3> a;
  Eigen::Matrix<double, 2 * kHalf + 1, 1> rhs;
  for (int i = -kHalf; i <= kHalf; ++i) {
    const double t = (j + i) * h;
    const double x = i * h;
    a.row(i + kHalf) << 1.0, x, x * x;
    rhs(i + kHalf) = v[static_cast<std::size_t>(((j + i) % m + m) % m)] - k * log_chord_sq(t - t0);
  }
  const Eigen::Vector3d c = a.colPivHouseholderQr().solve(rhs);
  return (a * c - rhs).norm();
}

// Finds zeros of w that fall between nodes: sharp finite local minima that a
// log singularity of integer strength fits far better than a smooth model.
std::vector<LogSingularity> off_grid_singularities(const std::vector<double>& v, double theta0) {
  const int m = static_cast<int>(v.size());
  std::vector<LogSingularity> found;
  if (m < 16) return found;
  const double h = kTwoPi / m;
  auto at = [&](int j) { return v[static_cast<std::size_t>((j % m + m) % m)]; };
  for (int j = 0; j < m; ++j) {
    bool finite = true;
    for (int i = -4; i <= 4; ++i) finite = finite && std::isfinite(at(j + i));
    if (!finite) continue;
    if (!(at(j) < at(j - 1) && at(j) <= at(j + 1))) continue;
    if (at(j - 1) - 2.0 * at(j) + at(j + 1) < 1.0) continue;
    const double smooth = singularity_misfit(v, j, 0, 0.0, h);
    double best = smooth;
    LogSingularity pick{0.0, 0};
    for (int k = 1; k <= 4; ++k) {
      double lo = (j - 0.5) * h, hi = (j + 0.5) * h;
      auto f = [&](double t) { return singularity_misfit(v, j, k, t, h); };
      const double g = 0.5 * (std::sqrt(5.0) - 1.0);
      double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
      double f1 = f(x1), f2 = f(x2);
      for (int it = 0; it < 80 && hi - lo > 1e-15 * h; ++it) {
        if (f1 < f2) {
          hi = x2; x2 = x1; f2 = f1; x1 = hi - g * (hi - lo); f1 = f(x1);
        } else {
          lo = x1; x1 = x2; f1 = f2; x2 = lo + g * (hi - lo); f2 = f(x2);
        }
      }
      const double t = 0.5 * (lo + hi);
      const double r = f(t);
      if (r < best) {
        best = r;
        pick = {theta0 + t, k};
      }
    }
    if (pick.strength > 0 && best < 1e-3 * smooth) found.push_back(pick);
  }
  return found;
}

}  // namespace

Complex outer_from_modulus(const BoundarySampler& logw, DiskPoint z, const Tolerances& tol) {
  std::vector<double> v = corrected_log_samples(logw.values());
  const int m = logw.size();
  double mean = 0.0;
  for (double x : v) {
    if (std::isnan(x)) throw MathError(ErrorCode::InvalidArgument, "NaN in log-modulus samples");
    if (!std::isfinite(x)) throw MathError(ErrorCode::DivergentLogIntegral, "log-modulus is -inf on a neighbourhood");
    mean += x;
  }
  mean /= m;
  if (mean < tol.divergence_cutoff)
    throw MathError(ErrorCode::DivergentLogIntegral, "mean of log w below the divergence cutoff");
  const Complex w = z.value();
  // Each singularity is removed from the samples and its outer factor
  // (1 - conj(zeta) z)^k applied exactly.
  const auto singular = off_grid_singularities(v, logw.theta(0));
  Complex factor{1.0};
  for (const auto& s : singular) {
    const Complex zeta = std::polar(1.0, s.theta);
    for (int j = 0; j < m; ++j)
      v[static_cast<std::size_t>(j)] -= s.strength * log_chord_sq(logw.theta(j) - s.theta);
    factor *= std::pow(1.0 - std::conj(zeta) * w, s.strength);
  }
  Complex acc{};
  for (int j = 0; j < m; ++j) {
    const Complex e = std::polar(1.0, logw.theta(j));
    acc += (e + w) / (e - w) * (0.5 * v[static_cast<std::size_t>(j)]);
  }
  return factor * std::exp(acc / static_cast<double>(m));
}

// Fejer-Riesz ---------------------------------------------------------------

SpectralFactor fejer_riesz_factor(const TrigPolynomial& t_in, const Tolerances& tol) {
  const double scale = t_in.max_abs_coeff();
  if (scale == 0.0) throw MathError(ErrorCode::FactorizationFailure, "trig polynomial is identically zero");
  if (t_in.sampled_min() < -tol.psd * std::max(1.0, scale))
    throw MathError(ErrorCode::NotNonnegative, "trig polynomial takes negative values on the circle");
  const TrigPolynomial t = t_in.trimmed(1e-13);
  const int n = t.degree();

  SpectralFactor out;
  if (n == 0) {
    const double c0 = t.coeff(0).real();
    if (c0 <= 0.0) throw MathError(ErrorCode::NotNonnegative, "nonpositive constant trig polynomial");
    out.scale = std::sqrt(c0);
    out.r = Poly::constant(out.scale);
    return out;
  }

  std::vector<Complex> pc(2 * static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= 2 * n; ++j) pc[static_cast<std::size_t>(j)] = t.coeff(j - n);
  const Poly laurent(std::move(pc));
  const std::vector<Complex> roots = poly_roots(laurent, tol);

  std::vector<Complex> outside;
  std::vector<Complex> unimodular;
  for (Complex r : roots) {
    const double mod = std::abs(r);
    if (std::abs(mod - 1.0) <= tol.unimodular_cluster) {
      unimodular.push_back(r);
    } else if (mod > 1.0) {
      outside.push_back(r);
    }
  }

  // Cluster circle roots by angle; each cluster contributes half its size.
  std::sort(unimodular.begin(), unimodular.end(),
            [](Complex a, Complex b) { return std::arg(a) < std::arg(b); });
  std::vector<std::vector<Complex>> clusters;
  for (Complex r : unimodular) {
    if (!clusters.empty() && std::abs(r - clusters.back().back()) <= tol.unimodular_cluster) {
      clusters.back().push_back(r);
    } else {
      clusters.push_back({r});
    }
  }
  if (clusters.size() > 1 &&
      std::abs(clusters.front().front() - clusters.back().back()) <= tol.unimodular_cluster) {
    clusters.front().insert(clusters.front().end(), clusters.back().begin(), clusters.back().end());
    clusters.pop_back();
  }
  int circle_half = 0;
  for (const auto& c : clusters) {
    if (c.size() % 2 != 0)
      throw MathError(ErrorCode::OddUnimodularMultiplicity, "circle root cluster with odd multiplicity");
    Complex mean{};
    for (Complex r : c) mean += r;
    mean /= static_cast<double>(c.size());
    // A root of multiplicity k is a simple root of the (k-1)-th derivative.
    Poly d = laurent;
    for (std::size_t k = 1; k < c.size(); ++k) d = d.derivative();
    const Poly dd = d.derivative();
    Complex z = mean;
    for (int it = 0; it < 8; ++it) {
      const Complex slope = dd(z);
      if (slope == Complex{}) break;
      const Complex step = d(z) / slope;
      z -= step;
      if (std::abs(step) <= 1e-16) break;
    }
    if (std::abs(z - mean) <= tol.unimodular_cluster) mean = z;
    const int mult = static_cast<int>(c.size() / 2);
    out.contact.push_back(mean / std::abs(mean));
    out.contact_multiplicity.push_back(mult);
    circle_half += mult;
  }
  if (static_cast<int>(outside.size()) + circle_half != n)
    throw MathError(ErrorCode::FactorizationFailure, "root pairing (lambda, 1/conj(lambda)) failed");

  out.off_circle = outside;
  out.roots = outside;
  for (std::size_t i = 0; i < out.contact.size(); ++i)
    for (int k = 0; k < out.contact_multiplicity[i]; ++k) out.roots.push_back(out.contact[i]);

  const Poly monic = Poly::from_roots(out.roots);
  double energy = 0.0;
  for (Complex c : monic.coeffs()) energy += std::norm(c);
  const double modulus = std::sqrt(t.coeff(0).real() / energy);
  const Complex r0 = monic[0];
  out.scale = modulus * std::conj(r0) / std::abs(r0);
  out.r = monic * out.scale;
  return out;
}

Poly fejer_riesz(const TrigPolynomial& t, const Tolerances& tol) { return fejer_riesz_factor(t, tol).r; }

// Extreme test --------------------------------------------------------------

bool is_inner(const RationalSymbol& b) {
  if (b.is_zero()) return false;
  const TrigPolynomial d = defect_trig_polynomial(b);
  const double scale = TrigPolynomial::abs_squared(b.den()).max_abs_coeff();
  return d.max_abs_coeff() <= 1e-10 * scale;
}

namespace {

struct TanhSinhNode {
  double dl;  // distance from the left endpoint
  double dr;  // distance from the right endpoint
  double w;   // weight, already scaled to the interval
};

// Tanh-sinh nodes on an interval of the given length at step h. Offsets from
// both endpoints are produced directly so endpoint singularities are
// evaluated without cancellation.
std::vector<TanhSinhNode> tanh_sinh_nodes(double length, double h) {
  std::vector<TanhSinhNode> nodes;
  const double half = 0.5 * length;
  const double hp = 0.5 * std::numbers::pi;
  for (int j = 0;; ++j) {
    const double t = j * h;
    const double u = hp * std::sinh(t);
    const double ch = std::cosh(u);
    const double w = h * hp * std::cosh(t) / (ch * ch) * half;
    const double near = length / (std::exp(2.0 * u) + 1.0);  // distance to the closer end
    if (near <= 0.0 || w < 1e-300) break;
    const double far = length - near;
    if (j == 0) {
      nodes.push_back({half, half, w});
    } else {
      nodes.push_back({far, near, w});
      nodes.push_back({near, far, w});
    }
    if (t > 8.0) break;
  }
  return nodes;
}

}  // namespace

double log_defect_integral(const RationalSymbol& b, const Tolerances& tol) {
  const SpectralFactor f = fejer_riesz_factor(defect_trig_polynomial(b), tol);
  // Contact roots are handled through their angle below.
  const std::vector<Complex>& smooth_roots = f.off_circle;
  const Poly& q = b.den();
  const double log_scale_sq = 2.0 * std::log(std::abs(f.scale));

  auto smooth_part = [&](double theta) {
    const Complex e = std::polar(1.0, theta);
    double acc = log_scale_sq - 2.0 * std::log(std::abs(q(e)));
    for (Complex r : smooth_roots) acc += 2.0 * std::log(std::abs(e - r));
    return acc;
  };

  if (f.contact.empty()) {
    double prev = 0.0;
    for (int m = 64; m <= (1 << 18); m *= 2) {
      double acc = 0.0;
      for (int j = 0; j < m; ++j) acc += smooth_part(kTwoPi * j / m);
      acc /= m;
      if (m > 64 && std::abs(acc - prev) <= 1e-15 * (1.0 + std::abs(acc))) return acc;
      prev = acc;
    }
    return prev;
  }

  std::vector<std::pair<double, int>> angles;  // (angle in [0, 2pi), multiplicity)
  for (std::size_t i = 0; i < f.contact.size(); ++i) {
    double a = std::arg(f.contact[i]);
    if (a < 0) a += kTwoPi;
    angles.emplace_back(a, f.contact_multiplicity[i]);
  }
  std::sort(angles.begin(), angles.end());
  const std::size_t k = angles.size();

  double total = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t right = (i + 1) % k;
    const double a = angles[i].first;
    const double len = (k == 1) ? kTwoPi : (right == 0 ? angles[0].first + kTwoPi - a : angles[right].first - a);
    auto integrand = [&](const TanhSinhNode& nd) {
      const double theta = a + nd.dl;
      double acc = smooth_part(theta);
      for (std::size_t c = 0; c < k; ++c) {
        double delta;
        if (k == 1) {
          delta = std::min(nd.dl, nd.dr);
        } else if (c == i) {
          delta = nd.dl;
        } else if (c == right) {
          delta = nd.dr;
        } else {
          delta = std::remainder(theta - angles[c].first, kTwoPi);
        }
        const double chord = 2.0 * std::sin(0.5 * std::abs(delta));
        acc += 2.0 * angles[c].second * std::log(chord);
      }
      return acc;
    };
    double prev = 0.0;
    double value = 0.0;
    for (int level = 0; level < 10; ++level) {
      const double h = std::ldexp(1.0, -level);
      value = 0.0;
      for (const auto& nd : tanh_sinh_nodes(len, h)) value += nd.w * integrand(nd);
      if (level > 2 && std::abs(value - prev) <= 1e-14 * (1.0 + std::abs(value))) break;
      prev = value;
    }
    total += value;
  }
  return total / kTwoPi;
}

ExtremeVerdict extreme_test(const RationalSymbol& b, const Tolerances& tol) {
  if (is_inner(b)) return {true, std::nullopt, true};
  return {false, log_defect_integral(b, tol), true};
}

namespace {

// Rectangle-rule value of the log integral for sampled data; nullopt when the
// integrand is -inf on most of the grid.
std::optional<double> sampled_log_mean(const SampledSymbol& b) {
  std::vector<double> v;
  v.reserve(b.values().size());
  int singular = 0;
  for (Complex x : b.values()) {
    const double d = 1.0 - std::norm(x);
    if (d <= 0.0) {
      ++singular;
      v.push_back(-std::numeric_limits<double>::infinity());
    } else {
      v.push_back(std::log(d));
    }
  }
  if (2 * singular > b.size()) return std::nullopt;
  v = corrected_log_samples(v);
  double acc = 0.0;
  for (double x : v) {
    if (!std::isfinite(x)) return std::nullopt;
    acc += x;
  }
  return acc / b.size();
}

}  // namespace

ExtremeVerdict extreme_test(const SampledSymbol& b, const Tolerances& tol) {
  for (Complex x : b.values())
    if (std::abs(x) > 1.0 + tol.sup) throw MathError(ErrorCode::InvalidSymbol, "sampled |b| exceeds 1");

  std::optional<double> fine;
  std::optional<double> coarse;
  if (b.refinable()) {
    coarse = sampled_log_mean(b);
    fine = sampled_log_mean(b.refined());
  } else {
    fine = sampled_log_mean(b);
    if (b.size() >= 32) coarse = sampled_log_mean(b.coarsened());
  }
  if (!fine) return {true, std::nullopt, false};
  const bool below = *fine < tol.divergence_cutoff;
  const bool not_rising = !coarse || *fine <= *coarse + 1e-12 * std::abs(*coarse);
  if (below && not_rising) return {true, std::nullopt, false};
  return {false, *fine, false};
}

}  // namespace drk
