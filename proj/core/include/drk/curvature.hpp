#pragma once

// Curvatures of X_b and S_b^*, their scalar unitary invariants, a
// finite-difference oracle, and grid-based equivalence decisions.
//
// Curvature is K(w) = -d^2/dw dw-bar log ||gamma(w)||^2 for a holomorphic
// section gamma. Closed forms are written out from the kernel norms
// (1 + |Phi|^2) / (1 - |w|^2) and (1 - |b|^2) / (1 - |w|^2); the
// finite-difference oracle below checks them.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "drk/pythagorean.hpp"
#include "drk/ratfun.hpp"

namespace drk {

/// d^2/dw dw-bar log(1 + |phi|^2) = |phi'|^2 / (1 + |phi|^2)^2.
/// Throws MathError(PoleAtPoint) at poles of phi.
double ddbar_log_one_plus(const RationalFunction& phi, DiskPoint w);

/// d^2/dw dw-bar log(1 - |phi|^2) = -|phi'|^2 / (1 - |phi|^2)^2.
/// Throws MathError(ModulusNotBelowOne) when |phi(w)| >= 1.
double ddbar_log_one_minus(const RationalFunction& phi, DiskPoint w);

/// -|Phi'|^2 / (1 + |Phi|^2)^2 - 1 / (1 - |w|^2)^2.
double curv_X(const PythagoreanPair& pair, DiskPoint w);

/// |b'|^2 / (1 - |b|^2)^2 - 1 / (1 - |w|^2)^2. Throws MathError(ModulusOne).
double curv_S(const RationalSymbol& b, DiskPoint w);

/// |Phi'(w)| / (1 + |Phi(w)|^2).
double inv_X(const PythagoreanPair& pair, DiskPoint w);

/// |b'(w)| / (1 - |b(w)|^2). Throws MathError(ModulusOne).
double inv_S(const RationalSymbol& b, DiskPoint w);

/// Five-point approximation of -(1/4) Laplacian of g at w.
/// Throws MathError(StencilOutsideDisk) unless |w| + h < 1.
double fd_curvature(const std::function<double(Complex)>& g, DiskPoint w, double h = 1e-3);

/// fd_curvature at h, h/2 and h/4 with a Richardson consistency check: the
/// ratio of successive differences should be near 4 for an O(h^2) stencil.
struct FdEstimate {
  double value;          // at step h
  double value_half;
  double value_quarter;
  double extrapolated;   // (4 v(h/2) - v(h)) / 3
  double ratio;          // |v(h) - v(h/2)| / |v(h/2) - v(h/4)|
  bool ill_conditioned;  // ratio far from 4 while differences exceed roundoff
};
FdEstimate fd_curvature_checked(const std::function<double(Complex)>& g, DiskPoint w, double h = 1e-3);

/// Polar grid (radii x angles, radii in (0, max_radius]) plus seeded uniform
/// random points in the disk of radius max_radius. Defaults give 1736 points.
struct EquivalenceGrid {
  int radii = 24;
  int angles = 64;
  int random_points = 200;
  std::uint64_t seed = 20240917;
  double max_radius = 0.95;

  std::vector<Complex> points() const;
};

enum class Verdict { Equivalent, NotEquivalent, Inconclusive };
std::string to_string(Verdict v);

struct EquivalenceReport {
  std::string first;
  std::string second;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Complex> witness;
  double max_discrepancy = 0.0;
  EquivalenceGrid grid;
  double tolerance = 0.0;
  int evaluated = 0;
  int skipped = 0;
};

inline constexpr double kDefaultEquivalenceTolerance = 1e-9;

/// Compares inv_X of the two pairs over the grid. Points where either
/// invariant is undefined are skipped; more than 10% skipped is Inconclusive.
EquivalenceReport decide_equiv_X(const PythagoreanPair& p1, const PythagoreanPair& p2,
                                 const EquivalenceGrid& grid = {},
                                 double tol = kDefaultEquivalenceTolerance);

/// Same procedure with inv_S.
EquivalenceReport decide_equiv_S(const RationalSymbol& b1, const RationalSymbol& b2,
                                 const EquivalenceGrid& grid = {},
                                 double tol = kDefaultEquivalenceTolerance);

}  // namespace drk
