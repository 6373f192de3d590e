#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "drk/curvature.hpp"
#include "drk/errors.hpp"
#include "drk/kernels.hpp"
#include "random_symbols.hpp"

using namespace drk;

namespace {

RationalSymbol sym(Poly p, Poly q = Poly{1.0}) { return RationalSymbol::make(std::move(p), std::move(q)); }
const RationalSymbol kB1 = sym(Poly{0.5, 0.5});
const RationalSymbol kB2 = sym(Poly{0.5, -0.5});
const RationalSymbol kZero = RationalSymbol::make(Poly{}, Poly{1.0});

double szego_term(Complex w) { return 1.0 / std::pow(1.0 - std::norm(w), 2); }

void expect_rel(double got, double want, double rel, double abs_floor = 1e-6) {
  EXPECT_LE(std::abs(got - want), std::max(rel * std::abs(want), abs_floor)) << got << " vs " << want;
}

}  // namespace

TEST(DdbarLog, Examples) {
  EXPECT_EQ(ddbar_log_one_plus(RationalFunction(Poly{3.0}, Poly{1.0}), DiskPoint(0.2)), 0.0);
  EXPECT_NEAR(ddbar_log_one_plus(RationalFunction(Poly{0.0, 1.0}, Poly{1.0}), DiskPoint(0.0)), 1.0, 1e-15);
  EXPECT_NEAR(ddbar_log_one_plus(RationalFunction(Poly{1.0, 1.0}, Poly{1.0, -1.0}), DiskPoint(0.0)), 1.0, 1e-14);
  EXPECT_EQ(ddbar_log_one_minus(RationalFunction(), DiskPoint(0.2)), 0.0);
  EXPECT_NEAR(ddbar_log_one_minus(RationalFunction(Poly{0.0, 1.0}, Poly{1.0}), DiskPoint(0.0)), -1.0, 1e-15);
  EXPECT_NEAR(ddbar_log_one_minus(kB1.function(), DiskPoint(0.0)), -4.0 / 9.0, 1e-15);
}

TEST(DdbarLog, Errors) {
  try {
    ddbar_log_one_plus(RationalFunction(Poly{1.0}, Poly{0.5, -1.0}), DiskPoint(0.5));
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.code(), ErrorCode::PoleAtPoint);
  }
  try {
    ddbar_log_one_minus(RationalFunction(Poly{0.0, 2.0}, Poly{1.0}), DiskPoint(0.6));
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.code(), ErrorCode::ModulusNotBelowOne);
  }
}

TEST(DdbarLog, MatchesQuarterLaplacian) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 5; ++t) {
    const RationalFunction phi(testkit::random_poly(rng, 2), testkit::random_stable_den(rng, 1));
    const double scale = 0.9 / testkit::circle_sup(phi);
    const RationalFunction small(phi.num() * Complex(scale), phi.den());
    for (int j = 0; j < 20; ++j) {
      const DiskPoint w(testkit::random_in_disk(rng, 0.5));
      const auto plus = fd_curvature_checked([&](Complex z) { return std::log(1.0 + std::norm(phi(z))); }, w);
      EXPECT_FALSE(plus.ill_conditioned);
      expect_rel(-plus.value, ddbar_log_one_plus(phi, w), 1e-3);
      const auto minus = fd_curvature_checked([&](Complex z) { return std::log(1.0 - std::norm(small(z))); }, w);
      EXPECT_FALSE(minus.ill_conditioned);
      expect_rel(-minus.value, ddbar_log_one_minus(small, w), 1e-3);
    }
  }
}

TEST(CurvX, Examples) {
  const auto p1 = mate(kB1);
  EXPECT_NEAR(curv_X(p1, DiskPoint(0.0)), -2.0, 1e-12);
  EXPECT_NEAR(curv_X(p1, DiskPoint(0.5)), -16.0 / 25.0 - 16.0 / 9.0, 1e-12);
  const auto p0 = mate(kZero);
  EXPECT_NEAR(curv_X(p0, DiskPoint(Complex(0.3, 0.1))), -szego_term(Complex(0.3, 0.1)), 1e-12);
}

TEST(CurvX, ComposedFromDdbarLog) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 10; ++t) {
    const auto p = mate(testkit::random_strict_symbol(rng));
    const DiskPoint w(testkit::random_in_disk(rng, 0.9));
    EXPECT_NEAR(curv_X(p, w), -ddbar_log_one_plus(p.phi, w) - szego_term(w.value()),
                1e-12 * std::max(1.0, std::abs(curv_X(p, w))));
  }
}

TEST(CurvS, Examples) {
  EXPECT_NEAR(curv_S(kB1, DiskPoint(0.0)), -5.0 / 9.0, 1e-14);
  EXPECT_NEAR(curv_S(kZero, DiskPoint(0.4)), -szego_term(0.4), 1e-12);
  const double fd = fd_curvature([](Complex z) { return std::log(norm_kb_sq(kB1, DiskPoint(z))); }, DiskPoint(0.3));
  expect_rel(fd, curv_S(kB1, DiskPoint(0.3)), 1e-3);
}

TEST(CurvS, ModulusOneThrows) {
  // A unimodular constant has |b| = 1 everywhere.
  const auto b = sym(Poly{Complex(0.6, 0.8)});
  try {
    curv_S(b, DiskPoint(0.1));
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.code(), ErrorCode::ModulusOne);
  }
}

TEST(Invariants, Examples) {
  const auto p1 = mate(kB1), p2 = mate(kB2);
  for (Complex w : {Complex(0.0), Complex(0.5), Complex(0.0, 0.3)}) {
    EXPECT_NEAR(inv_X(p1, DiskPoint(w)), 1.0 / (1.0 + std::norm(w)), 1e-12);
    EXPECT_NEAR(inv_X(p2, DiskPoint(w)), 1.0 / (1.0 + std::norm(w)), 1e-12);
  }
  EXPECT_EQ(inv_X(mate(kZero), DiskPoint(0.4)), 0.0);
  EXPECT_NEAR(inv_S(kB1, DiskPoint(0.0)), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(inv_S(kB2, DiskPoint(0.0)), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(inv_S(kB1, DiskPoint(0.5)), 8.0 / 7.0, 1e-14);
  EXPECT_NEAR(inv_S(kB2, DiskPoint(0.5)), 8.0 / 15.0, 1e-14);
}

TEST(Invariants, ExampleIdentityOnFullGrid) {
  const auto p1 = mate(kB1), p2 = mate(kB2);
  const auto pts = EquivalenceGrid{}.points();
  ASSERT_EQ(pts.size(), 1736u);
  for (Complex w : pts) {
    const double expect = 1.0 / (1.0 + std::norm(w));
    ASSERT_NEAR(inv_X(p1, DiskPoint(w)), expect, 1e-12) << w;
    ASSERT_NEAR(inv_X(p2, DiskPoint(w)), expect, 1e-12) << w;
  }
}

TEST(FdCurvature, Examples) {
  const auto szego_log = [](Complex z) { return -std::log(1.0 - std::norm(z)); };
  EXPECT_NEAR(fd_curvature(szego_log, DiskPoint(0.0)), -1.0, 1e-5);
  const auto p1 = mate(kB1);
  EXPECT_NEAR(fd_curvature([&](Complex z) { return std::log(norm_cauchy_sq(p1, DiskPoint(z))); }, DiskPoint(0.0)),
              -2.0, 1e-4);
  EXPECT_EQ(fd_curvature([](Complex) { return 2.5; }, DiskPoint(0.3)), 0.0);
}

TEST(FdCurvature, StencilOutsideDisk) {
  try {
    fd_curvature([](Complex) { return 0.0; }, DiskPoint(0.9995));
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.code(), ErrorCode::StencilOutsideDisk);
  }
}

TEST(FdCurvature, RichardsonRatioNearFour) {
  const auto e = fd_curvature_checked([](Complex z) { return std::log(1.0 + std::norm(std::exp(z))); },
                                      DiskPoint(0.2), 0.05);
  EXPECT_FALSE(e.ill_conditioned);
  EXPECT_NEAR(e.ratio, 4.0, 0.2);
}

TEST(Curvature, ClosedFormsMatchFiniteDifferences) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 5; ++t) {
    const auto b = t % 2 ? testkit::random_contact_symbol(rng, 1) : testkit::random_strict_symbol(rng);
    const auto p = mate(b);
    for (int j = 0; j < 20; ++j) {
      const DiskPoint w(testkit::random_in_disk(rng, 0.5));
      const double fx = fd_curvature([&](Complex z) { return std::log(norm_cauchy_sq(p, DiskPoint(z))); }, w);
      expect_rel(fx, curv_X(p, w), 1e-3);
      const double fs = fd_curvature([&](Complex z) { return std::log(norm_kb_sq(b, DiskPoint(z))); }, w);
      expect_rel(fs, curv_S(b, w), 1e-3);
    }
  }
}

TEST(EquivalenceGrid, DeterministicAndInside) {
  const EquivalenceGrid g;
  const auto a = g.points(), b = g.points();
  ASSERT_EQ(a, b);
  for (Complex w : a) EXPECT_LE(std::abs(w), 0.95 + 1e-15);
  EquivalenceGrid other;
  other.seed = 1;
  EXPECT_NE(other.points(), a);
}

TEST(DecideEquiv, ExampleVerdicts) {
  const auto p1 = mate(kB1), p2 = mate(kB2);
  const auto rx = decide_equiv_X(p1, p2);
  EXPECT_EQ(rx.verdict, Verdict::Equivalent);
  EXPECT_LE(rx.max_discrepancy, 1e-9);
  EXPECT_FALSE(rx.witness);
  EXPECT_EQ(rx.evaluated, 1736);

  const auto rs = decide_equiv_S(kB1, kB2);
  EXPECT_EQ(rs.verdict, Verdict::NotEquivalent);
  ASSERT_TRUE(rs.witness);
  EXPECT_GE(rs.max_discrepancy, 0.3);
  EXPECT_NEAR(std::abs(inv_S(kB1, DiskPoint(*rs.witness)) - inv_S(kB2, DiskPoint(*rs.witness))),
              rs.max_discrepancy, 1e-12);

  const auto r0 = decide_equiv_X(mate(kZero), p1);
  EXPECT_EQ(r0.verdict, Verdict::NotEquivalent);
  const auto self = decide_equiv_S(kB1, kB1);
  EXPECT_EQ(self.verdict, Verdict::Equivalent);
  EXPECT_EQ(self.max_discrepancy, 0.0);
}

TEST(DecideEquiv, ReflexiveAndSymmetric) {
  std::mt19937_64 rng(10);
  EquivalenceGrid grid;
  grid.radii = 8;
  grid.angles = 16;
  grid.random_points = 40;
  for (int t = 0; t < 10; ++t) {
    const auto b1 = testkit::random_strict_symbol(rng);
    const auto b2 = testkit::random_contact_symbol(rng, 1);
    const auto p1 = mate(b1), p2 = mate(b2);
    EXPECT_EQ(decide_equiv_X(p1, p1, grid).verdict, Verdict::Equivalent);
    EXPECT_EQ(decide_equiv_X(p1, p2, grid).verdict, decide_equiv_X(p2, p1, grid).verdict);
    EXPECT_EQ(decide_equiv_S(b1, b2, grid).verdict, decide_equiv_S(b2, b1, grid).verdict);
  }
}

TEST(DecideEquiv, UnimodularMultipleIsSEquivalent) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 5; ++t) {
    const auto b = testkit::random_contact_symbol(rng, 1);
    const auto lb = RationalSymbol::make(b.num() * testkit::random_unimodular(rng), b.den());
    EXPECT_EQ(decide_equiv_S(b, lb).verdict, Verdict::Equivalent);
  }
}

TEST(DecideEquiv, RotatedSymbolVerdictIsReported) {
  const Complex lambda = std::polar(1.0, 0.7);
  const auto rot = sym(Poly{0.5, 0.5 * lambda});
  const auto r = decide_equiv_S(kB1, rot);
  EXPECT_NE(r.verdict, Verdict::Inconclusive);
  EXPECT_EQ(r.evaluated + r.skipped, 1736);
}

TEST(DecideEquiv, ReportConsistency) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 5; ++t) {
    const auto b1 = testkit::random_strict_symbol(rng), b2 = testkit::random_strict_symbol(rng);
    const auto r = decide_equiv_S(b1, b2);
    if (r.verdict == Verdict::NotEquivalent) {
      ASSERT_TRUE(r.witness);
      EXPECT_GT(r.max_discrepancy, r.tolerance);
    } else if (r.verdict == Verdict::Equivalent) {
      EXPECT_LE(r.max_discrepancy, r.tolerance);
    }
  }
}
