#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "symrank/scalars.hpp"

namespace symrank {
namespace {

TEST(Rational, NormalizeReducesByGcd) {
  const Rational r = normalize(2, 4);
  EXPECT_EQ(r.numerator(), 1);
  EXPECT_EQ(r.denominator(), 2);
}

TEST(Rational, NormalizeMovesSignToNumerator) {
  const Rational r = normalize(3, -6);
  EXPECT_EQ(r.numerator(), -1);
  EXPECT_EQ(r.denominator(), 2);
}

TEST(Rational, ZeroIsZeroOverOne) {
  const Rational r = normalize(0, 7);
  EXPECT_EQ(r.numerator(), 0);
  EXPECT_EQ(r.denominator(), 1);
  EXPECT_EQ(r.str(), "0/1");
}

TEST(Rational, ZeroDenominatorRejected) {
  EXPECT_THROW(normalize(1, 0), std::invalid_argument);
  EXPECT_THROW(Rational::parse("3/0"), std::invalid_argument);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, ParseRejectsGarbage) {
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1.5"), std::invalid_argument);
}

TEST(Rational, RenderParseRoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 99999);
  for (int t = 0; t < 500; ++t) {
    const Rational r(mpz_class(num(rng)), mpz_class(den(rng)));
    EXPECT_EQ(Rational::parse(r.str()), r);
  }
  const Rational big(mpz_class("123456789012345678901234567890"), mpz_class("-7"));
  EXPECT_EQ(Rational::parse(big.str()), big);
}

TEST(Rational, FromDoubleIsExact) {
  EXPECT_EQ(Rational::from_double(0.5), Rational(1) / Rational(2));
  EXPECT_EQ(Rational::from_double(-3.0), Rational(-3));
  EXPECT_THROW(Rational::from_double(std::nan("")), NumericError);
}

TEST(GaussianRational, FieldAxiomsHoldExactly) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 1000; ++t) {
    const auto a = oracle::random_gaussian(rng, 50, 30);
    const auto b = oracle::random_gaussian(rng, 50, 30);
    const auto c = oracle::random_gaussian(rng, 50, 30);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a.conj().conj(), a);
    if (!b.is_zero()) {
      ASSERT_EQ((a / b) * b, a);
    }
  }
}

TEST(GaussianRational, NormAndConjugate) {
  const GaussianRational z(Rational(3), Rational(4));
  EXPECT_EQ(z.norm(), Rational(25));
  EXPECT_EQ(z * z.conj(), GaussianRational(25));
  EXPECT_EQ(GaussianRational::i() * GaussianRational::i(), GaussianRational(-1));
  EXPECT_THROW(z / GaussianRational(0), std::domain_error);
}

TEST(GaussianRational, LiteralParsing) {
  EXPECT_EQ(GaussianRational::parse("i"), GaussianRational::i());
  EXPECT_EQ(GaussianRational::parse("-i"), -GaussianRational::i());
  EXPECT_EQ(GaussianRational::parse("-2"), GaussianRational(-2));
  EXPECT_EQ(GaussianRational::parse("1-i"), GaussianRational(Rational(1), Rational(-1)));
  EXPECT_EQ(GaussianRational::parse("1/3+4/5i"),
            GaussianRational(Rational(1) / Rational(3), Rational(4) / Rational(5)));
  EXPECT_EQ(GaussianRational::parse("-2i"), GaussianRational(Rational(0), Rational(-2)));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const auto z = oracle::random_gaussian(rng, 20, 9);
    EXPECT_EQ(GaussianRational::parse(z.str()), z) << z.str();
  }
}

TEST(ComplexFloat, ApproxEqExamples) {
  EXPECT_TRUE(approx_eq({1, 0}, {1, 0}, 0.0));
  EXPECT_TRUE(approx_eq({1, 0}, {1 + 1e-12, 0}, 1e-9));
  EXPECT_FALSE(approx_eq({1, 0}, {2, 0}, 1e-9));
  EXPECT_THROW(approx_eq({1, 0}, {1, 0}, -1.0), std::invalid_argument);
}

TEST(ComplexFloat, ApproxEqIsSymmetric) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g(0.0, 10.0);
  for (int t = 0; t < 500; ++t) {
    const ComplexFloat a(g(rng), g(rng));
    const ComplexFloat b = a + ComplexFloat(g(rng), g(rng)) * 1e-6;
    for (double tol : {1e-9, 1e-7, 1e-5}) EXPECT_EQ(approx_eq(a, b, tol), approx_eq(b, a, tol));
  }
}

TEST(ComplexFloat, ExactConversionRoundTrips) {
  const ComplexFloat z(0.1, -2.75);
  EXPECT_EQ(to_float(to_exact(z)), z);
  EXPECT_FALSE(is_finite(ComplexFloat(INFINITY, 0)));
}

}  // namespace
}  // namespace symrank
