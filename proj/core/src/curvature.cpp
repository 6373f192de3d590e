#include "drk/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "drk/errors.hpp"
#include "parallel.hpp"

namespace drk {

namespace {

// d^2/dw dw-bar of -log(1 - |w|^2).
double szego_term(DiskPoint w) {
  const double s = 1.0 - std::norm(w.value());
  return 1.0 / (s * s);
}

double defect_at(const RationalSymbol& b, DiskPoint w) {
  const double d = 1.0 - std::norm(b(w.value()));
  if (d <= 1e-14) throw MathError(ErrorCode::ModulusOne, "|b(w)| = 1 inside the disk");
  return d;
}

}  // namespace

double ddbar_log_one_plus(const RationalFunction& phi, DiskPoint w) {
  const Complex v = phi(w.value());
  const double s = 1.0 + std::norm(v);
  return std::norm(phi.derivative_at(w.value())) / (s * s);
}

double ddbar_log_one_minus(const RationalFunction& phi, DiskPoint w) {
  const Complex v = phi(w.value());
  const double s = 1.0 - std::norm(v);
  if (!(s > 0.0)) throw MathError(ErrorCode::ModulusNotBelowOne, "|phi(w)| >= 1");
  return -std::norm(phi.derivative_at(w.value())) / (s * s);
}

double curv_X(const PythagoreanPair& pair, DiskPoint w) {
  return -ddbar_log_one_plus(pair.phi, w) - szego_term(w);
}

double curv_S(const RationalSymbol& b, DiskPoint w) {
  const double d = defect_at(b, w);
  return std::norm(b.derivative_at(w.value())) / (d * d) - szego_term(w);
}

double inv_X(const PythagoreanPair& pair, DiskPoint w) {
  const Complex v = pair.phi(w.value());
  return std::abs(pair.phi.derivative_at(w.value())) / (1.0 + std::norm(v));
}

double inv_S(const RationalSymbol& b, DiskPoint w) {
  return std::abs(b.derivative_at(w.value())) / defect_at(b, w);
}

double fd_curvature(const std::function<double(Complex)>& g, DiskPoint w, double h) {
  const Complex z = w.value();
  if (!(h > 0.0) || std::abs(z) + h >= 1.0)
    throw MathError(ErrorCode::StencilOutsideDisk, "five-point stencil leaves the disk");
  const Complex ih(0.0, h);
  const double lap = g(z + h) + g(z - h) + g(z + ih) + g(z - ih) - 4.0 * g(z);
  return -0.25 * lap / (h * h);
}

FdEstimate fd_curvature_checked(const std::function<double(Complex)>& g, DiskPoint w, double h) {
  FdEstimate e{};
  e.value = fd_curvature(g, w, h);
  e.value_half = fd_curvature(g, w, h / 2);
  e.value_quarter = fd_curvature(g, w, h / 4);
  e.extrapolated = (4.0 * e.value_half - e.value) / 3.0;
  const double d1 = std::abs(e.value - e.value_half);
  const double d2 = std::abs(e.value_half - e.value_quarter);
  e.ratio = d2 > 0.0 ? d1 / d2 : std::numeric_limits<double>::infinity();
  // Below this the differences are dominated by cancellation in the stencil.
  const double roundoff = 1e-7 * std::max(1.0, std::abs(e.value));
  e.ill_conditioned = d1 > roundoff && d2 > roundoff && (e.ratio < 0.4 || e.ratio > 40.0);
  return e;
}

std::vector<Complex> EquivalenceGrid::points() const {
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(radii * angles + random_points));
  for (int i = 0; i < radii; ++i) {
    const double r = max_radius * (i + 1) / radii;
    for (int j = 0; j < angles; ++j) pts.push_back(std::polar(r, 2.0 * std::numbers::pi * j / angles));
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 0; k < random_points; ++k) {
    const double r = max_radius * std::sqrt(unit(rng));
    const double t = 2.0 * std::numbers::pi * unit(rng);
    pts.push_back(std::polar(r, t));
  }
  return pts;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Equivalent: return "equivalent";
    case Verdict::NotEquivalent: return "not_equivalent";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

template <class Inv1, class Inv2>
EquivalenceReport decide(Inv1&& f1, Inv2&& f2, const EquivalenceGrid& grid, double tol) {
  const std::vector<Complex> pts = grid.points();
  std::vector<double> gap(pts.size(), -1.0);
  detail::parallel_for(pts.size(), [&](std::size_t i) {
    try {
      const DiskPoint w(pts[i]);
      gap[i] = std::abs(f1(w) - f2(w));
    } catch (const MathError&) {
      gap[i] = -1.0;
    }
  });

  EquivalenceReport rep;
  rep.grid = grid;
  rep.tolerance = tol;
  std::size_t arg = pts.size();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!(gap[i] >= 0.0)) {
      ++rep.skipped;
      continue;
    }
    ++rep.evaluated;
    if (arg == pts.size() || gap[i] > rep.max_discrepancy) {
      rep.max_discrepancy = gap[i];
      arg = i;
    }
  }
  if (10 * rep.skipped > static_cast<int>(pts.size()) || rep.evaluated == 0) {
    rep.verdict = Verdict::Inconclusive;
  } else if (rep.max_discrepancy <= tol) {
    rep.verdict = Verdict::Equivalent;
  } else {
    rep.verdict = Verdict::NotEquivalent;
    rep.witness = pts[arg];
  }
  return rep;
}

}  // namespace

EquivalenceReport decide_equiv_X(const PythagoreanPair& p1, const PythagoreanPair& p2,
                                 const EquivalenceGrid& grid, double tol) {
  return decide([&](DiskPoint w) { return inv_X(p1, w); }, [&](DiskPoint w) { return inv_X(p2, w); },
                grid, tol);
}

EquivalenceReport decide_equiv_S(const RationalSymbol& b1, const RationalSymbol& b2,
                                 const EquivalenceGrid& grid, double tol) {
  return decide([&](DiskPoint w) { return inv_S(b1, w); }, [&](DiskPoint w) { return inv_S(b2, w); },
                grid, tol);
}

}  // namespace drk
