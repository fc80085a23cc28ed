#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "symrank/proofs.hpp"
#include "symrank/sweep.hpp"

namespace symrank {
namespace {

using GR = GaussianRational;
using Poly = ExactPolynomial;
using Datum = HermiteDatum<GR>;

const std::vector<GR> kPool{GR(0), GR(1), GR(-1), GR::i()};

TEST(Nullspace, CountAndAnnihilation) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& spec : enumerate_jordan_specs(n, kPool)) {
      const auto cert = nullspace_basis(spec);
      const int m = min_poly_degree(spec);
      ASSERT_EQ(cert.vectors.size(), static_cast<std::size_t>(n - m)) << spec.str();
      ASSERT_EQ(certificate_rank(cert), static_cast<std::size_t>(n - m)) << spec.str();
      const auto b = build_jordan(spec);
      ASSERT_TRUE(verify_annihilation(cert, b)) << spec.str();
      ASSERT_TRUE(verify_annihilation(cert, random_similarity(b, static_cast<std::uint64_t>(n), 2))) << spec.str();
      ASSERT_EQ(rank_exact(jacobian_exact(b).entries) + certificate_rank(cert), static_cast<std::size_t>(n));
    }
  }
}

TEST(Nullspace, OneDerivativeTooManyFails) {
  // m = 3, s = 2: only v(0) is allowed; v'(0) must not annihilate.
  const JordanSpec spec{3, {{GR(0), {1, 2}}}};
  NullspaceCertificate cert = nullspace_basis(spec);
  ASSERT_EQ(cert.vectors.size(), 1u);
  cert.vectors.push_back({GR(0), 1, v_vector(3, 1, GR(0))});
  EXPECT_FALSE(verify_annihilation(cert, build_jordan(spec)));
}

TEST(Nullspace, SizeMismatchRejected) {
  const auto cert = nullspace_basis(JordanSpec{2, {{GR(0), {1, 1}}}});
  EXPECT_THROW(verify_annihilation(cert, ExactMatrix(3, 3)), std::invalid_argument);
}

TEST(DividedDifference, DistinctNodesGiveLeadingCoefficient) {
  // f = t^3 on 0, 1, 2, 3.
  std::vector<Datum> data;
  for (int x = 0; x <= 3; ++x) data.push_back({GR(x), {GR(x * x * x)}});
  EXPECT_EQ(divided_difference(data), GR(1));
}

TEST(DividedDifference, ConfluentNodes) {
  // f = t^3: f[1,1] = 3, f[1,1,2] = f[1,2] - f[1,1] = 7 - 3.
  EXPECT_EQ(divided_difference(std::vector<Datum>{{GR(1), {GR(1), GR(3)}}, {GR(1), {}}}), GR(3));
  EXPECT_EQ(divided_difference(std::vector<Datum>{{GR(1), {GR(1), GR(3)}}, {GR(1), {}}, {GR(2), {GR(8)}}}), GR(4));
  // Triple node: f[1,1,1] = f''(1) / 2.
  EXPECT_EQ(divided_difference(std::vector<Datum>{{GR(1), {GR(1), GR(3), GR(6)}}, {GR(1), {}}, {GR(1), {}}}), GR(3));
}

TEST(DividedDifference, MissingDerivativesRejected) {
  EXPECT_THROW(divided_difference(std::vector<Datum>{{GR(1), {GR(1)}}, {GR(1), {GR(1)}}}), std::invalid_argument);
  EXPECT_THROW(divided_difference(std::vector<Datum>{}), std::invalid_argument);
}

TEST(DividedDifference, PolynomialOfMatchingDegreeGivesLeadingCoefficient) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const int degree = 1 + trial % 5;
    std::vector<GR> coeffs;
    for (int i = 0; i <= degree; ++i) coeffs.push_back(oracle::random_gaussian(rng, 4, 3));
    if (coeffs.back().is_zero()) coeffs.back() = GR(1);
    const Poly f(coeffs);
    // Nodes drawn with repetition from a small set.
    std::vector<Datum> data;
    std::uniform_int_distribution<int> pick(0, 2);
    for (int i = 0; i <= degree; ++i) {
      const GR x(pick(rng));
      Datum d{x, {}};
      for (int r = 0; r <= degree; ++r) d.derivatives.push_back(f.derivative(r)(x));
      data.push_back(d);
    }
    ASSERT_EQ(divided_difference(data), f.leading());
  }
}

TEST(GenocchiHermite, ExactRouteConvergesLinearly) {
  const std::vector<GR> eps{GR(Rational(1, 100)), GR(Rational(1, 1000)), GR(Rational(1, 10000))};
  for (std::size_t n = 2; n <= 5; ++n) {
    for (int k = 0; k < static_cast<int>(n) && k <= 3; ++k) {
      for (const GR& lambda : {GR(0), GR(1), GR::i(), GR(Rational(1, 2), Rational(-1, 3))}) {
        const auto r = genocchi_hermite_check(n, k, lambda, eps);
        ASSERT_TRUE(r.passes) << "n=" << n << " k=" << k << " lambda=" << lambda.str();
        ASSERT_EQ(r.errors.size(), 3u);
      }
    }
  }
  EXPECT_THROW(genocchi_hermite_check(3, 3, GR(0), eps), std::invalid_argument);
}

TEST(GenocchiHermite, FloatRouteConvergesAtModerateEps) {
  const auto r = genocchi_hermite_check<ComplexFloat>(4, 2, ComplexFloat(0.3, 0.2), {1e-1, 1e-2, 1e-3});
  EXPECT_TRUE(r.passes);
  for (double ratio : r.ratios) EXPECT_GT(ratio, 8.0);
}

TEST(ConfluentVandermonde, SmallCases) {
  const auto one = confluent_vandermonde_det({{GR(5), 1}});
  EXPECT_EQ(one.direct, GR(-1));
  EXPECT_EQ(one.closed_form, GR(1));
  EXPECT_EQ(one.sign, -1);
  EXPECT_TRUE(one.abs_equal);

  // v(t) = (-t, 1) at distinct a, b: det = -a + b.
  const auto two = confluent_vandermonde_det({{GR(2), 1}, {GR(7), 1}});
  EXPECT_EQ(two.direct, GR(5));
  EXPECT_EQ(two.closed_form, GR(5));
  EXPECT_EQ(two.sign, 1);

  // Double cluster: columns v(l), v'(l) = (-l, 1), (-1, 0); det = 1 = 0! 1!.
  const auto confluent = confluent_vandermonde_det({{GR::i(), 2}});
  EXPECT_EQ(confluent.direct, GR(1));
  EXPECT_EQ(confluent.closed_form, GR(1));
}

TEST(ConfluentVandermonde, MatchesLaplaceOracle) {
  const std::vector<std::vector<VandermondeCluster>> cases{
      {{GR(0), 2}, {GR(1), 1}},
      {{GR(0), 1}, {GR(-1), 2}, {GR::i(), 1}},
      {{GR(2), 3}, {GR::i(), 2}},
  };
  for (const auto& c : cases) {
    const auto r = confluent_vandermonde_det(c);
    EXPECT_EQ(r.direct, oracle::laplace_det(confluent_vandermonde_matrix(c)));
    EXPECT_TRUE(r.abs_equal);
    EXPECT_NE(r.sign, 0);
  }
}

TEST(ConfluentVandermonde, RejectsBadClusters) {
  EXPECT_THROW(confluent_vandermonde_det({{GR(1), 1}, {GR(1), 2}}), std::invalid_argument);
  EXPECT_THROW(confluent_vandermonde_det({{GR(1), 0}}), std::invalid_argument);
  EXPECT_THROW(confluent_vandermonde_det({}), std::invalid_argument);
}

TEST(Tangent, DirectionLayout) {
  const auto h = tangent_direction(4, 2, {GR(3), GR(-1)});
  ExactMatrix expected(4, 4);
  expected(3, 2) = GR(-3);
  expected(3, 3) = GR(1);
  EXPECT_EQ(h, expected);
  EXPECT_THROW(tangent_direction(2, 3, {GR(1), GR(1), GR(1)}), std::invalid_argument);
  EXPECT_THROW(tangent_direction(3, 2, {GR(1)}), std::invalid_argument);
}

TEST(Tangent, EchelonCertificatePasses) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& spec : enumerate_jordan_specs(n, kPool)) {
      const auto fspec = jordan_to_frobenius(spec);
      const auto cert = tangent_construction(fspec);
      const auto m = static_cast<std::size_t>(min_poly_degree(spec));
      ASSERT_TRUE(cert.passes) << spec.str();
      ASSERT_EQ(cert.rank, m);
      ASSERT_EQ(cert.images.size(), m);
      for (std::size_t i = 1; i <= m; ++i) ASSERT_EQ(cert.pivots[i - 1], static_cast<int>(m - i + 1));
    }
  }
}

TEST(Tangent, SigmaIsAffineAlongDirections) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& spec : enumerate_jordan_specs(n, {GR(0), GR(1), GR::i()})) {
      const auto r = sigma_linearity_check(jordan_to_frobenius(spec), 3, static_cast<std::uint64_t>(n));
      ASSERT_TRUE(r.passes()) << spec.str();
    }
  }
}

TEST(Vanishing, ConstantCurveVanishesIdentically) {
  const JordanSpec spec{4, {{GR(0), {1, 2}}, {GR(1), {1}}}};
  const CurveSpec curve{{build_jordan(spec)}};
  for (const auto& v : vanishing_profile(spec, curve)) {
    EXPECT_FALSE(v.observed.has_value());
    EXPECT_TRUE(v.passes);
  }
}

TEST(Vanishing, RandomLinearCurvesMeetRequiredOrder) {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& spec : enumerate_jordan_specs(n, {GR(0), GR::i()})) {
      const auto b = build_jordan(spec);
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const auto curve = random_linear_curve(b, seed);
        for (const auto& v : vanishing_profile(spec, curve)) {
          ASSERT_TRUE(v.passes) << spec.str() << " lambda=" << v.lambda.str() << " k=" << v.k << " observed="
                                << (v.observed ? static_cast<long>(*v.observed) : -1L) << " required=" << v.required;
        }
      }
    }
  }
}

TEST(Vanishing, AlongCurveAgreesWithPointEvaluation) {
  const JordanSpec spec{3, {{GR(0), {1, 2}}}};
  const auto b = build_jordan(spec);
  const auto curve = random_linear_curve(b, 9);
  const GR z(Rational(1, 3), Rational(1, 2));
  const ExactMatrix at_z = curve.coefficients[0] + curve.coefficients[1] * z;
  for (int k = 0; k <= 3; ++k) {
    EXPECT_EQ(p_bracket_along_curve(curve, k, GR(2))(z), p_bracket_eval(symmetrize(at_z), k, GR(2)));
  }
  EXPECT_THROW(order_of_vanishing(spec, curve, GR(0), 3), std::invalid_argument);
  EXPECT_THROW(order_of_vanishing(spec, curve, GR(1), 0), std::invalid_argument);
  EXPECT_THROW(order_of_vanishing(spec, CurveSpec{{ExactMatrix::identity(3)}}, GR(0), 0), std::invalid_argument);
}

TEST(DerivativeIdentity, CorrectedIndexHoldsLiteralDoesNot) {
  std::mt19937_64 rng(42);
  bool literal_failed = false;
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto m = oracle::random_exact_matrix(rng, n, 3, 2);
    const auto lambda = oracle::random_gaussian(rng, 3, 2);
    const auto r = derivative_identity_check(m, lambda);
    ASSERT_TRUE(r.corrected_index_holds);
    if (!r.literal_index_holds) literal_failed = true;
  }
  EXPECT_TRUE(literal_failed);
}

}  // namespace
}  // namespace symrank
