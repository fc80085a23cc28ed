#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "symrank/canonical.hpp"
#include "symrank/matpoly.hpp"

namespace symrank {
namespace {

using GR = GaussianRational;
using Poly = ExactPolynomial;

ExactMatrix diag(std::initializer_list<int> values) {
  ExactMatrix m(values.size(), values.size());
  std::size_t i = 0;
  for (int v : values) {
    m(i, i) = GR(v);
    ++i;
  }
  return m;
}

ExactMatrix jordan2(const GR& lambda) {
  ExactMatrix m(2, 2);
  m(0, 0) = lambda;
  m(1, 1) = lambda;
  m(0, 1) = GR(1);
  return m;
}

TEST(CharPoly, ZeroMatrixIsTCubed) {
  EXPECT_EQ(char_poly(ExactMatrix(3, 3)), Poly({GR(0), GR(0), GR(0), GR(1)}));
}

TEST(CharPoly, DiagonalOneTwo) { EXPECT_EQ(char_poly(diag({1, 2})), Poly({GR(2), GR(-3), GR(1)})); }

TEST(CharPoly, CompanionMatchesCofactorOracle) {
  const Poly p{GR(5), GR(3), GR(1)};
  const ExactMatrix c = build_companion(p);
  EXPECT_EQ(oracle::char_poly_by_cofactors(c), p);
  EXPECT_EQ(char_poly(c), p);
}

TEST(CharPoly, RandomExactMatchesCofactorOracle) {
  std::mt19937_64 rng(21);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int t = 0; t < 10; ++t) {
      const auto m = oracle::random_exact_matrix(rng, n, 4, 3);
      const auto p = char_poly(m);
      ASSERT_EQ(p, oracle::char_poly_by_cofactors(m));
      ASSERT_TRUE(p.is_monic());
      ASSERT_EQ(p.degree(), static_cast<int>(n));
    }
  }
}

TEST(CharPoly, FloatOverflowIsReported) {
  FloatMatrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = ComplexFloat(1e200, 0);
  EXPECT_THROW(char_poly(m), NumericError);
}

TEST(CharPoly, SimilarityInvariant) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 20; ++t) {
    const auto m = oracle::random_exact_matrix(rng, 4, 3, 2);
    const auto u = random_unimodular(4, rng(), 3);
    ASSERT_EQ(u.q * u.q_inverse, ExactMatrix::identity(4));
    ASSERT_EQ(char_poly(u.q * m * u.q_inverse), char_poly(m));
  }
}

TEST(Symmetrize, Examples) {
  EXPECT_EQ(symmetrize(ExactMatrix(4, 4)).sigma, std::vector<GR>(4, GR(0)));
  const GR lambda(Rational(2), Rational(-1, 3));
  EXPECT_EQ(symmetrize(jordan2(lambda)).sigma, (std::vector<GR>{GR(2) * lambda, lambda * lambda}));
  EXPECT_EQ(symmetrize(diag({1, 2, 3})).sigma, (std::vector<GR>{GR(6), GR(11), GR(6)}));
}

TEST(Symmetrize, OneByOneIsIdentity) {
  ExactMatrix m(1, 1);
  m(0, 0) = GR(Rational(3), Rational(7));
  EXPECT_EQ(symmetrize(m).sigma, std::vector<GR>{m(0, 0)});
}

TEST(Symmetrize, MatchesPrincipalMinors) {
  std::mt19937_64 rng(23);
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto m = oracle::random_exact_matrix(rng, n, 3, 2);
    const auto s = symmetrize(m);
    for (std::size_t k = 1; k <= n; ++k) ASSERT_EQ(s[k - 1], oracle::sigma_by_principal_minors(m, k));
  }
}

TEST(Adjugate, OneByOne) {
  ExactMatrix m(1, 1);
  m(0, 0) = GR(5);
  const auto a = adjugate_poly(m);
  ASSERT_EQ(a.coefficients.size(), 1u);
  EXPECT_EQ(a.coefficients[0], ExactMatrix::identity(1));
}

TEST(Adjugate, ZeroTwoByTwoIsTI) {
  const auto a = adjugate_poly(ExactMatrix(2, 2));
  ASSERT_EQ(a.coefficients.size(), 2u);
  EXPECT_EQ(a.coefficients[0], ExactMatrix(2, 2));
  EXPECT_EQ(a.coefficients[1], ExactMatrix::identity(2));
}

TEST(Adjugate, PolynomialIdentity) {
  std::mt19937_64 rng(24);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int t = 0; t < 5; ++t) {
      const auto m = oracle::random_exact_matrix(rng, n, 3, 2);
      const auto res = faddeev_leverrier(m);
      Matrix<Poly> tim(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          tim(i, j) = Poly(-m(i, j));
          if (i == j) tim(i, j) += Poly::variable();
        }
      const Matrix<Poly> product = tim * to_polynomial_matrix(res.adjugate);
      Matrix<Poly> expected(n, n);
      for (std::size_t i = 0; i < n; ++i) expected(i, i) = res.char_poly;
      ASSERT_EQ(product, expected);
      ASSERT_EQ(res.adjugate.degree(), static_cast<int>(n) - 1);
    }
  }
}

TEST(PBracket, ZeroPointIsTPowerN) {
  const SymPoint<GR> zero{std::vector<GR>(3, GR(0))};
  const GR t(Rational(2, 3));
  EXPECT_EQ(p_bracket_eval(zero, 0, t), t * t * t);
}

TEST(PBracket, RootOfQuadratic) {
  EXPECT_EQ(p_bracket_eval(SymPoint<GR>{{GR(3), GR(2)}}, 0, GR(1)), GR(0));
}

TEST(PBracket, AtSymmetrizedMatrixIsCharacteristicDeterminant) {
  std::mt19937_64 rng(25);
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto m = oracle::random_exact_matrix(rng, n, 3, 2);
    const auto t = oracle::random_gaussian(rng, 5, 3);
    ASSERT_EQ(p_bracket_eval(symmetrize(m), 0, t), oracle::laplace_det(ExactMatrix::identity(n) * t - m));
  }
}

TEST(PBracket, DerivativeBeyondDegreeIsZero) {
  const SymPoint<GR> v{{GR(1), GR(2)}};
  EXPECT_EQ(p_bracket_eval(v, 3, GR(7)), GR(0));
  EXPECT_EQ(p_bracket_eval(v, 2, GR(7)), GR(2));
}

TEST(PBracket, DerivativeIdentityUsesComplementaryIndex) {
  // P^{(k)}_{[pi(M)]}(l) = k! sigma_{n-k}(l I - M), checked with principal minors.
  std::mt19937_64 rng(26);
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto m = oracle::random_exact_matrix(rng, n, 3, 2);
    const auto lambda = oracle::random_gaussian(rng, 4, 2);
    const auto shifted = ExactMatrix::identity(n) * lambda - m;
    GR factorial(1);
    for (std::size_t k = 0; k <= n; ++k) {
      if (k > 0) factorial = factorial * GR(static_cast<long>(k));
      ASSERT_EQ(p_bracket_eval(symmetrize(m), static_cast<int>(k), lambda),
                factorial * oracle::sigma_by_principal_minors(shifted, n - k));
    }
  }
}

TEST(VVector, Examples) {
  const GR lambda(Rational(3), Rational(1));
  EXPECT_EQ(v_vector(2, 0, lambda), (std::vector<GR>{-lambda, GR(1)}));
  EXPECT_EQ(v_vector(2, 1, lambda), (std::vector<GR>{GR(-1), GR(0)}));
  EXPECT_EQ(v_vector(3, 0, GR(0)), (std::vector<GR>{GR(0), GR(0), GR(-1)}));
}

TEST(VVector, RepresentsPBracketMinusLeadingPower) {
  std::mt19937_64 rng(27);
  for (std::size_t n = 1; n <= 6; ++n) {
    SymPoint<GR> u;
    for (std::size_t j = 0; j < n; ++j) u.sigma.push_back(oracle::random_gaussian(rng, 5, 3));
    const auto t = oracle::random_gaussian(rng, 5, 3);
    GR tn(1);
    for (std::size_t j = 0; j < n; ++j) tn = tn * t;
    ASSERT_EQ(p_bracket_eval(u, 0, t) - tn, dot(v_vector(n, 0, t), u.sigma));
  }
}

TEST(VVector, FullDerivativeFormIncludesLeadingPower) {
  // P^{(k)}_{[u]}(l) = (t^n)^{(k)}(l) + v^{(k)}(l) . u
  std::mt19937_64 rng(28);
  for (std::size_t n = 1; n <= 6; ++n) {
    SymPoint<GR> u;
    for (std::size_t j = 0; j < n; ++j) u.sigma.push_back(oracle::random_gaussian(rng, 5, 3));
    const auto lambda = oracle::random_gaussian(rng, 5, 3);
    const Poly tn = Poly::from_root(GR(0), static_cast<int>(n));
    for (int k = 0; k < static_cast<int>(n); ++k) {
      ASSERT_EQ(p_bracket_eval(u, k, lambda), tn.derivative(k)(lambda) + dot(v_vector(n, k, lambda), u.sigma));
    }
  }
}

TEST(VVector, DerivativeFamilyConsistencySymbolic) {
  // Component j of v as a polynomial, differentiated symbolically.
  const std::size_t n = 6;
  const GR lambda(Rational(-2, 3), Rational(5, 7));
  for (int k = 0; k + 1 < static_cast<int>(n); ++k) {
    const auto next = v_vector(n, k + 1, lambda);
    for (std::size_t j = 1; j <= n; ++j) {
      Poly comp = Poly::from_root(GR(0), static_cast<int>(n - j));
      if (j % 2 == 1) comp = -comp;
      ASSERT_EQ(comp.derivative(k + 1)(lambda), next[j - 1]);
      ASSERT_EQ(comp.derivative(k)(lambda), v_vector(n, k, lambda)[j - 1]);
    }
  }
}

TEST(VVector, DerivativeFamilyConsistencyFiniteDifference) {
  const std::size_t n = 5;
  const ComplexFloat lambda(0.3, -0.4);
  const double h = 1e-5;
  for (int k = 0; k + 1 < static_cast<int>(n); ++k) {
    const auto plus = v_vector(n, k, lambda + h);
    const auto minus = v_vector(n, k, lambda - h);
    const auto next = v_vector(n, k + 1, lambda);
    for (std::size_t j = 0; j < n; ++j) EXPECT_TRUE(approx_eq((plus[j] - minus[j]) / (2 * h), next[j], 1e-8));
  }
}

TEST(Dot, Unconjugated) {
  EXPECT_EQ(dot(std::vector<GR>{GR(1), GR(0)}, std::vector<GR>{GR(0), GR(1)}), GR(0));
  EXPECT_EQ(dot(std::vector<GR>{GR::i(), GR(1)}, std::vector<GR>{GR::i(), GR(1)}), GR(0));
  const std::vector<GR> w{GR(4), GR(-2), GR::i()};
  for (std::size_t j = 0; j < 3; ++j) {
    std::vector<GR> e(3, GR(0));
    e[j] = GR(1);
    EXPECT_EQ(dot(e, w), w[j]);
  }
  EXPECT_THROW(dot(std::vector<GR>{GR(1)}, w), std::invalid_argument);
}

TEST(SpectralRadius, Examples) {
  EXPECT_EQ(spectral_radius_bound(FloatMatrix(3, 3), 10), 0.0);
  EXPECT_NEAR(spectral_radius_bound(FloatMatrix::identity(2), 10), 1.0, 1e-12);
  FloatMatrix j2(2, 2);
  j2(0, 1) = 1.0;
  const double r = spectral_radius_bound(j2, 10);
  EXPECT_GE(r, 0.0);
  EXPECT_LT(r, 1.0);
}

TEST(SpectralRadius, UpperBoundConvergesFromAbove) {
  FloatMatrix m(2, 2);
  m(0, 0) = 0.5;
  m(0, 1) = 10.0;
  m(1, 1) = -0.25;
  const double coarse = spectral_radius_bound(m, 1);
  const double fine = spectral_radius_bound(m, 30);
  EXPECT_GE(coarse, fine);
  EXPECT_GE(fine, 0.5);
  EXPECT_NEAR(fine, 0.5, 1e-6);
  EXPECT_TRUE(in_spectral_ball(m));
}

TEST(SpectralRadius, HugeEntriesDoNotOverflow) {
  FloatMatrix m = FloatMatrix::identity(3) * ComplexFloat(1e300);
  EXPECT_NEAR(spectral_radius_bound(m, 20) / 1e300, 1.0, 1e-9);
  m(0, 0) = ComplexFloat(std::nan(""), 0);
  EXPECT_THROW(spectral_radius_bound(m, 3), NumericError);
}

}  // namespace
}  // namespace symrank
