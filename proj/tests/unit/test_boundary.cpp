#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "drk/boundary.hpp"
#include "drk/errors.hpp"
#include "drk/pythagorean.hpp"
#include "random_symbols.hpp"

using namespace drk;

namespace {

constexpr double kPi = std::numbers::pi;

RationalSymbol sym(Poly p, Poly q = Poly{1.0}) { return RationalSymbol::make(std::move(p), std::move(q)); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const MathError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no MathError thrown";
  return ErrorCode::InvalidArgument;
}

double max_roundtrip_error(const Poly& r, const TrigPolynomial& t, int samples = 1024) {
  double err = 0.0;
  for (int j = 0; j < samples; ++j) {
    const double th = 2 * kPi * j / samples;
    err = std::max(err, std::abs(std::norm(r(std::polar(1.0, th))) - t(th)));
  }
  return err;
}

double min_root_modulus(const Poly& r) {
  double m = 1e300;
  if (r.degree() < 1) return m;
  for (Complex z : poly_roots(r)) m = std::min(m, std::abs(z));
  return m;
}

}  // namespace

TEST(TrigPolynomial, RejectsNonHermitian) {
  EXPECT_THROW(TrigPolynomial({Complex(1.0), 2.0, Complex(1.0, 0.5)}), MathError);
}

TEST(TrigPolynomial, AbsSquaredMatchesPointwise) {
  std::mt19937_64 rng(3);
  const Poly s = testkit::random_poly(rng, 4);
  const auto t = TrigPolynomial::abs_squared(s);
  EXPECT_EQ(t.degree(), 4);
  for (int j = 0; j < 50; ++j) {
    const double th = 0.13 * j;
    EXPECT_NEAR(t(th), std::norm(s(std::polar(1.0, th))), 1e-11);
  }
}

TEST(CircleMean, Examples) {
  EXPECT_DOUBLE_EQ(circle_mean(BoundarySampler::from_function([](double) { return 3.0; }, 16)), 3.0);
  EXPECT_NEAR(circle_mean(BoundarySampler::from_function([](double t) { return std::cos(t); }, 64)), 0.0, 1e-15);
  const auto half = BoundarySampler::from_function(
      [](double t) { return std::norm(0.5 + 0.5 * std::polar(1.0, t)); }, 64);
  EXPECT_NEAR(circle_mean(half), 0.5, 1e-15);
}

TEST(CircleMean, ExactForTrigPolynomialsBelowHalfTheNodes) {
  std::mt19937_64 rng(4);
  for (int m : {16, 64, 256}) {
    const auto t = testkit::random_nonnegative_trig(rng, m / 2 - 1);
    const auto s = BoundarySampler::from_function([&](double th) { return t(th); }, m);
    EXPECT_NEAR(circle_mean(s), t.coeff(0).real(), 1e-12 * std::max(1.0, t.max_abs_coeff()));
  }
}

TEST(BoundarySampler, RequiresPowerOfTwoNodes) {
  EXPECT_THROW(BoundarySampler::from_values(std::vector<double>(24, 1.0)), MathError);
  EXPECT_THROW(BoundarySampler::from_values(std::vector<double>(8, 1.0)), MathError);
}

TEST(ExtremeTest, Examples) {
  EXPECT_TRUE(extreme_test(sym(Poly{0.0, 1.0})).extreme);
  const auto v = extreme_test(sym(Poly{0.5, 0.5}));
  EXPECT_FALSE(v.extreme);
  ASSERT_TRUE(v.integral);
  const auto c = extreme_test(sym(Poly{0.5}));
  ASSERT_TRUE(c.integral);
  EXPECT_NEAR(*c.integral, std::log(0.75), 1e-8);
  EXPECT_TRUE(c.exact);
}

TEST(ExtremeTest, BlaschkeProductsAreExtreme) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 10; ++t) {
    const auto b = testkit::random_blaschke(rng, 1 + t % 3);
    const auto v = extreme_test(b);
    EXPECT_TRUE(v.extreme);
    EXPECT_FALSE(v.integral);
  }
}

TEST(ExtremeTest, ContactSymbolsMatchClosedForm) {
  // |B (1 + conj(zeta) z) / 2|^2 = |1 + conj(zeta) z|^2 / 4 on the circle, so
  // 1 - |b|^2 = |1 - conj(zeta) z|^2 / 4 and the integral is -log 4.
  std::mt19937_64 rng(22);
  for (int t = 0; t < 6; ++t) {
    const auto b = testkit::random_contact_symbol(rng, t % 3);
    const auto v = extreme_test(b);
    ASSERT_FALSE(v.extreme);
    EXPECT_NEAR(*v.integral, -std::log(4.0), 1e-8);
  }
}

TEST(ExtremeTest, MatchesJensenOnRandomSymbols) {
  // Integral of log |a|^2 for outer a is 2 log a(0); the mate supplies a(0).
  std::mt19937_64 rng(23);
  for (int t = 0; t < 10; ++t) {
    const auto b = testkit::random_strict_symbol(rng, 0.99);
    const auto v = extreme_test(b);
    ASSERT_FALSE(v.extreme);
    const auto pair = mate(b);
    EXPECT_NEAR(*v.integral, 2.0 * std::log(pair.a(0.0).real()), 1e-8);
  }
}

TEST(ExtremeTest, MatchesFineTrapezoidOnSmoothSymbols) {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 5; ++t) {
    const auto b = testkit::random_strict_symbol(rng, 0.9);
    const int m = 1 << 14;
    double s = 0.0;
    for (int j = 0; j < m; ++j) s += std::log(1.0 - std::norm(b(std::polar(1.0, 2 * kPi * j / m))));
    EXPECT_NEAR(*extreme_test(b).integral, s / m, 1e-10);
  }
}

TEST(ExtremeTest, SampledSymbols) {
  const auto inner = SampledSymbol::from_function([](double t) { return std::polar(1.0, t); }, 256);
  const auto vi = extreme_test(inner);
  EXPECT_TRUE(vi.extreme);
  EXPECT_FALSE(vi.exact);

  const auto half = SampledSymbol::from_function([](double t) { return 0.5 + 0.5 * std::polar(1.0, t); }, 1024);
  const auto vh = extreme_test(half);
  EXPECT_FALSE(vh.extreme);
  ASSERT_TRUE(vh.integral);
  EXPECT_NEAR(*vh.integral, -std::log(4.0), 1e-2);

  std::vector<Complex> fixed(64, Complex(0.5));
  const auto vc = extreme_test(SampledSymbol::from_values(fixed));
  EXPECT_FALSE(vc.extreme);
  EXPECT_NEAR(*vc.integral, std::log(0.75), 1e-12);
}

TEST(ExtremeTest, SampledAboveOneIsInvalid) {
  std::vector<Complex> v(32, Complex(0.5));
  v[3] = 1.1;
  EXPECT_EQ(code_of([&] { extreme_test(SampledSymbol::from_values(v)); }), ErrorCode::InvalidSymbol);
}

TEST(FejerRiesz, Constant) {
  const Poly r = fejer_riesz(TrigPolynomial({Complex(0.75)}));
  ASSERT_EQ(r.degree(), 0);
  EXPECT_NEAR(std::abs(r[0] - std::sqrt(3.0) / 2), 0.0, 1e-15);
}

TEST(FejerRiesz, OneMinusCosineOverTwo) {
  const Poly r = fejer_riesz(TrigPolynomial({-0.25, 0.5, -0.25}));
  ASSERT_EQ(r.degree(), 1);
  EXPECT_LT(std::abs(r[0] - 0.5), 1e-10);
  EXPECT_LT(std::abs(r[1] + 0.5), 1e-10);
}

TEST(FejerRiesz, PlantedInsideRootIsReflected) {
  // |1 + 2iz|^2: the root i/2 lies inside, so the outer factor is 2 + iz
  // up to a unimodular constant fixed by r(0) > 0.
  const auto t = TrigPolynomial::abs_squared(Poly{1.0, Complex(0, 2)});
  const Poly r = fejer_riesz(t);
  EXPECT_LE(max_roundtrip_error(r, t), 1e-10);
  EXPECT_GT(min_root_modulus(r), 1.0);
  EXPECT_NEAR(r[0].imag(), 0.0, 1e-14);
  EXPECT_GT(r[0].real(), 0.0);
  EXPECT_LT(std::abs(r[0] - 2.0) + std::abs(r[1] - Complex(0, 1)), 1e-10);

  const TrigPolynomial literal({Complex(0, 2), 5.0, Complex(0, -2)});
  const Poly r2 = fejer_riesz(literal);
  EXPECT_LE(max_roundtrip_error(r2, literal), 1e-10);
  EXPECT_GT(min_root_modulus(r2), 1.0);
}

TEST(FejerRiesz, RandomRoundTrip) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 20; ++t) {
    const auto tp = testkit::random_nonnegative_trig(rng, 1 + t % 8);
    const auto f = fejer_riesz_factor(tp);
    EXPECT_LE(max_roundtrip_error(f.r, tp), 1e-8);
    EXPECT_GE(min_root_modulus(f.r), 1.0 - 1e-8);
    EXPECT_GT(f.r[0].real(), 0.0);
    EXPECT_NEAR(f.r[0].imag(), 0.0, 1e-12);
  }
}

TEST(FejerRiesz, DoubleCircleRootsAreSplit) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 5; ++t) {
    const Complex zeta = testkit::random_unimodular(rng);
    const Poly s = Poly{1.0, -std::conj(zeta)} * testkit::random_poly(rng, 2);
    const auto tp = TrigPolynomial::abs_squared(s);
    const auto f = fejer_riesz_factor(tp);
    EXPECT_LE(max_roundtrip_error(f.r, tp), 1e-8);
    ASSERT_EQ(f.contact.size(), 1u);
    EXPECT_LT(std::abs(f.contact[0] - zeta), 1e-7);
  }
}

TEST(FejerRiesz, Errors) {
  EXPECT_EQ(code_of([] { fejer_riesz(TrigPolynomial({0.5, 0.0, 0.5})); }), ErrorCode::NotNonnegative);
  EXPECT_EQ(code_of([] { fejer_riesz(TrigPolynomial({Complex(0.0)})); }), ErrorCode::FactorizationFailure);
  // (1 - cos)/2 pushed just below zero: two simple circle roots.
  EXPECT_EQ(code_of([] { fejer_riesz(TrigPolynomial({-0.25, 0.5 - 1e-11, -0.25})); }),
            ErrorCode::OddUnimodularMultiplicity);
}

TEST(OuterFromModulus, ConstantModulus) {
  const auto s = BoundarySampler::from_function([](double) { return std::log(0.75); }, 64);
  for (Complex z : {Complex(0.0), Complex(0.4, -0.3)})
    EXPECT_LT(std::abs(outer_from_modulus(s, DiskPoint(z)) - std::sqrt(0.75)), 1e-14);
}

TEST(OuterFromModulus, RecoversMateWithBoundaryZero) {
  const auto s = BoundarySampler::from_function(
      [](double t) { return std::log(std::norm((1.0 - std::polar(1.0, t)) / 2.0)); }, 4096);
  for (Complex z : {Complex(0.0), Complex(0.3), Complex(0.0, 0.5)}) {
    const Complex expect = (1.0 - z) / 2.0;
    EXPECT_LT(std::abs(outer_from_modulus(s, DiskPoint(z)) - expect), 1e-4) << z;
  }
}

TEST(OuterFromModulus, PositiveAtOrigin) {
  std::mt19937_64 rng(33);
  const auto tp = testkit::random_nonnegative_trig(rng, 3);
  const auto s = BoundarySampler::from_function([&](double t) { return std::log(tp(t)); }, 256);
  const Complex a0 = outer_from_modulus(s, DiskPoint(0.0));
  EXPECT_GT(a0.real(), 0.0);
  EXPECT_NEAR(a0.imag(), 0.0, 1e-14);
  EXPECT_NEAR(a0.real(), std::exp(0.5 * circle_mean(s)), 1e-14);
}

TEST(OuterFromModulus, AgreesWithRationalMates) {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 6; ++t) {
    const auto b = t % 2 ? testkit::random_contact_symbol(rng, 1) : testkit::random_strict_symbol(rng, 0.95);
    const auto pair = mate(b);
    const auto s = BoundarySampler::from_function(
        [&](double th) { return std::log(1.0 - std::norm(b(std::polar(1.0, th)))); }, 4096);
    for (int j = 0; j < 5; ++j) {
      const Complex z = testkit::random_in_disk(rng, 0.7);
      EXPECT_LT(std::abs(outer_from_modulus(s, DiskPoint(z)) - pair.a(z)), 1e-4);
    }
  }
}

TEST(OuterFromModulus, DivergentIntegral) {
  const auto s = BoundarySampler::from_function([](double) { return -100.0; }, 32);
  EXPECT_EQ(code_of([&] { outer_from_modulus(s, DiskPoint(0.0)); }), ErrorCode::DivergentLogIntegral);
}
