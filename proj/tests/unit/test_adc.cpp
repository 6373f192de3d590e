#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "drk/adc.hpp"
#include "drk/curvature.hpp"
#include "drk/errors.hpp"
#include "random_symbols.hpp"

using namespace drk;

namespace {

RationalSymbol sym(Poly p, Poly q = Poly{1.0}) { return RationalSymbol::make(std::move(p), std::move(q)); }
const RationalSymbol kB1 = sym(Poly{0.5, 0.5});
const RationalSymbol kB2 = sym(Poly{0.5, -0.5});

}  // namespace

TEST(AdcPoints, Examples) {
  const auto a = adc_points(kB1);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_LT(std::abs(a[0].zeta - 1.0), 1e-12);
  EXPECT_NEAR(a[0].c, 0.5, 1e-12);
  EXPECT_NEAR(std::abs(a[0].b_at_zeta), 1.0, 1e-12);
  const auto b = adc_points(kB2);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_LT(std::abs(b[0].zeta + 1.0), 1e-12);
  EXPECT_NEAR(b[0].c, 0.5, 1e-12);
  EXPECT_TRUE(adc_points(sym(Poly{0.5})).empty());
  EXPECT_TRUE(adc_points(RationalSymbol::make(Poly{}, Poly{1.0})).empty());
}

TEST(AdcPoints, InnerThrows) {
  try {
    adc_points(sym(Poly{0.0, 1.0}));
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.code(), ErrorCode::InnerSymbol);
  }
}

TEST(AdcValue, Examples) {
  EXPECT_NEAR(adc_value(kB1, 1.0), 0.5, 1e-15);
  EXPECT_NEAR(adc_value(kB2, -1.0), 0.5, 1e-15);
  EXPECT_NEAR(adc_value(sym(Poly{0.0, 1.0}), 1.0), 1.0, 1e-15);
  try {
    adc_value(kB1, -1.0);
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotContactPoint);
  }
}

TEST(RadialQuotient, Examples) {
  double prev = 1e9;
  for (double r : {0.9, 0.99, 0.999}) {
    const double q = radial_quotient(kB1, 1.0, r);
    EXPECT_LT(std::abs(q - 0.5), std::abs(prev - 0.5));
    prev = q;
  }
  EXPECT_NEAR(prev, 0.5, 1e-3);
  const auto zero = RationalSymbol::make(Poly{}, Poly{1.0});
  EXPECT_GT(radial_quotient(zero, 1.0, 0.999), 400.0);
  EXPECT_NEAR(radial_quotient(sym(Poly{0.0, 1.0}), 1.0, 0.7), 1.0, 1e-14);
}

TEST(AdcPoints, RandomContactSymbols) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 10; ++t) {
    const Complex zeta = testkit::random_unimodular(rng);
    const auto bl = testkit::random_blaschke(rng, t % 3);
    const auto b = RationalSymbol::make(bl.num() * Poly{0.5, 0.5 * std::conj(zeta)}, bl.den());
    const auto pts = adc_points(b);
    ASSERT_EQ(pts.size(), 1u);
    EXPECT_LT(std::abs(pts[0].zeta - zeta), 1e-8);
    EXPECT_GT(pts[0].c, 0.0);
    EXPECT_NEAR(std::abs(pts[0].zeta), 1.0, 1e-15);
  }
}

TEST(AdcPoints, RadialQuotientConvergesLinearly) {
  std::mt19937_64 rng(52);
  for (int t = 0; t < 8; ++t) {
    const auto b = testkit::random_contact_symbol(rng, t % 3);
    for (const auto& p : adc_points(b)) {
      double prev_err = -1.0;
      for (int k = 2; k <= 6; ++k) {
        const double err = std::abs(radial_quotient(b, p.zeta, 1.0 - std::pow(10.0, -k)) - p.c);
        if (prev_err > 0) {
          const double ratio = err / prev_err;
          EXPECT_GE(ratio, 0.05);
          EXPECT_LE(ratio, 0.5);
        }
        prev_err = err;
      }
    }
  }
}

TEST(AdcPoints, MatchCircleZerosOfMate) {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 6; ++t) {
    const auto b = testkit::random_contact_symbol(rng, 1);
    const auto a = mate(b).a;
    const auto pts = adc_points(b);
    std::vector<Complex> circle_zeros;
    for (Complex r : poly_roots(a.num()))
      if (std::abs(std::abs(r) - 1.0) < 1e-6) circle_zeros.push_back(r / std::abs(r));
    // double zeros of |a|^2 are simple zeros of a
    ASSERT_EQ(circle_zeros.size(), pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      double best = 1e9;
      for (Complex z : circle_zeros) best = std::min(best, std::abs(z - pts[i].zeta));
      EXPECT_LE(best, 1e-7);
    }
  }
}

TEST(SameAdc, Examples) {
  EXPECT_FALSE(same_adc(kB1, kB2));
  EXPECT_TRUE(same_adc(kB1, kB1));
  EXPECT_FALSE(same_adc(kB1, sym(Poly{0.375, 0.375})));
}

TEST(SameAdc, NecessaryForSEquivalence) {
  std::mt19937_64 rng(54);
  for (int t = 0; t < 10; ++t) {
    const auto b1 = testkit::random_contact_symbol(rng, t % 2);
    const auto b2 = t % 2 ? RationalSymbol::make(b1.num() * testkit::random_unimodular(rng), b1.den())
                          : testkit::random_contact_symbol(rng, 1);
    if (decide_equiv_S(b1, b2).verdict == Verdict::Equivalent) EXPECT_TRUE(same_adc(b1, b2));
  }
}
