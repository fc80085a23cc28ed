#include "symrank/proofs.hpp"

#include <random>

#include "symrank/linalg.hpp"

namespace symrank {

namespace {

GaussianRational factorial(int k) {
  GaussianRational f(1);
  for (int r = 2; r <= k; ++r) f = f * GaussianRational(r);
  return f;
}

GaussianRational power(const GaussianRational& x, int e) {
  GaussianRational out(1);
  for (int r = 0; r < e; ++r) out = out * x;
  return out;
}

GaussianRational random_gaussian_integer(std::mt19937_64& rng, int magnitude) {
  std::uniform_int_distribution<int> dist(-magnitude, magnitude);
  const int re = dist(rng);
  const int im = dist(rng);
  return {Rational(re), Rational(im)};
}

Matrix<ExactPolynomial> constant_polynomial_matrix(const ExactMatrix& m) {
  return map_entries<ExactPolynomial>(m, [](const GaussianRational& x) { return ExactPolynomial(x); });
}

}  // namespace

NullspaceCertificate nullspace_basis(const JordanSpec& spec) {
  spec.validate();
  NullspaceCertificate cert;
  cert.n = static_cast<std::size_t>(spec.n);
  for (const auto& group : spec.blocks) {
    const int upper = group.multiplicity() - group.largest();
    for (int k = 0; k < upper; ++k) {
      cert.vectors.push_back({group.eigenvalue, k, v_vector(cert.n, k, group.eigenvalue)});
    }
  }
  return cert;
}

bool verify_annihilation(const NullspaceCertificate& cert, const ExactMatrix& b) {
  require_square(b, "verify_annihilation");
  if (cert.n != b.rows()) throw std::invalid_argument("verify_annihilation: certificate size does not match matrix");
  const auto jac = jacobian_exact(b);
  for (const auto& vec : cert.vectors) {
    if (vec.v.size() != cert.n) throw std::invalid_argument("verify_annihilation: certificate vector has wrong length");
    for (std::size_t c = 0; c < jac.entries.cols(); ++c) {
      if (!dot(vec.v, jac.column(c)).is_zero()) return false;
    }
  }
  return true;
}

std::size_t certificate_rank(const NullspaceCertificate& cert) {
  if (cert.vectors.empty()) return 0;
  std::vector<std::vector<GaussianRational>> rows;
  for (const auto& vec : cert.vectors) rows.push_back(vec.v);
  return rank_exact(stack_rows(rows, cert.n));
}

ExactMatrix confluent_vandermonde_matrix(const std::vector<VandermondeCluster>& clusters) {
  std::size_t n = 0;
  for (std::size_t a = 0; a < clusters.size(); ++a) {
    if (clusters[a].multiplicity < 1) throw std::invalid_argument("confluent_vandermonde: multiplicity must be positive");
    for (std::size_t b = 0; b < a; ++b) {
      if (clusters[a].lambda == clusters[b].lambda) {
        throw std::invalid_argument("confluent_vandermonde: repeated cluster eigenvalue " + clusters[a].lambda.str());
      }
    }
    n += static_cast<std::size_t>(clusters[a].multiplicity);
  }
  if (n == 0) throw std::invalid_argument("confluent_vandermonde: no clusters");
  ExactMatrix m(n, n);
  std::size_t col = 0;
  for (const auto& cluster : clusters) {
    for (int r = 0; r < cluster.multiplicity; ++r, ++col) {
      const auto v = v_vector(n, r, cluster.lambda);
      for (std::size_t row = 0; row < n; ++row) m(row, col) = v[row];
    }
  }
  return m;
}

ConfluentVandermondeReport confluent_vandermonde_det(const std::vector<VandermondeCluster>& clusters) {
  ConfluentVandermondeReport report;
  report.direct = determinant(confluent_vandermonde_matrix(clusters));

  GaussianRational closed(1);
  for (const auto& cluster : clusters) {
    for (int j = 0; j < cluster.multiplicity; ++j) closed = closed * factorial(j);
  }
  for (std::size_t a = 0; a < clusters.size(); ++a) {
    for (std::size_t b = a + 1; b < clusters.size(); ++b) {
      closed = closed * power(clusters[b].lambda - clusters[a].lambda, clusters[a].multiplicity * clusters[b].multiplicity);
    }
  }
  report.closed_form = closed;
  report.direct_abs_squared = report.direct.norm();
  report.closed_form_abs_squared = closed.norm();
  report.abs_equal = report.direct_abs_squared == report.closed_form_abs_squared;
  if (report.direct == closed) {
    report.sign = 1;
  } else if (report.direct == -closed) {
    report.sign = -1;
  }
  return report;
}

ExactMatrix tangent_direction(std::size_t n, std::size_t m, const std::vector<GaussianRational>& h) {
  if (m == 0 || m > n || h.size() != m) throw std::invalid_argument("tangent_direction: bad block size");
  ExactMatrix out(n, n);
  for (std::size_t i = 0; i < m; ++i) out(n - 1, n - m + i) = -h[i];
  return out;
}

TangentCertificate tangent_construction(const FrobeniusSpec& fspec) {
  fspec.validate();
  const ExactMatrix b = build_frobenius(fspec);
  const std::size_t n = b.rows();
  const auto m = static_cast<std::size_t>(fspec.minimal_polynomial().degree());

  TangentCertificate cert;
  for (std::size_t i = 1; i <= m; ++i) {
    std::vector<GaussianRational> h(m, GaussianRational(0));
    h[i - 1] = GaussianRational(1);
    ExactMatrix dir = tangent_direction(n, m, h);
    cert.images.push_back(directional_derivative(b, dir).sigma);
    cert.directions.push_back(std::move(dir));
    cert.h_index.push_back(i);

    int pivot = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!cert.images.back()[c].is_zero()) {
        pivot = static_cast<int>(c) + 1;
        break;
      }
    }
    cert.pivots.push_back(pivot);
  }
  cert.rank = rank_exact(stack_rows(cert.images, n));
  cert.echelon = true;
  for (std::size_t i = 1; i <= m; ++i) {
    if (cert.pivots[i - 1] != static_cast<int>(m - i + 1)) cert.echelon = false;
  }
  cert.passes = cert.images.size() == m && cert.rank == m && cert.echelon;
  return cert;
}

SigmaLinearityReport sigma_linearity_check(const FrobeniusSpec& fspec, int trials, std::uint64_t seed) {
  fspec.validate();
  const ExactMatrix b = build_frobenius(fspec);
  const std::size_t n = b.rows();
  const auto m = static_cast<std::size_t>(fspec.minimal_polynomial().degree());
  const SymPoint<GaussianRational> base = symmetrize(b);
  const Matrix<ExactPolynomial> b_poly = constant_polynomial_matrix(b);
  const ExactPolynomial zeta = ExactPolynomial::variable();

  SigmaLinearityReport report;
  // Linear coefficient of sigma(B + zeta H(h)); also checks the affine shape.
  auto linear_part = [&](const std::vector<GaussianRational>& h) {
    const Matrix<ExactPolynomial> curve = b_poly + constant_polynomial_matrix(tangent_direction(n, m, h)) * zeta;
    const auto sigma = symmetrize(curve);
    std::vector<GaussianRational> out;
    for (std::size_t k = 0; k < n; ++k) {
      if (sigma[k].degree() > 1) report.degree_at_most_one = false;
      if (!(sigma[k].coeff(0) == base[k])) report.degree_at_most_one = false;
      out.push_back(sigma[k].coeff(1));
    }
    return out;
  };

  const std::vector<GaussianRational> zero(m, GaussianRational(0));
  for (const auto& c : linear_part(zero)) {
    if (!c.is_zero()) report.zero_direction_fixes = false;
  }

  for (std::size_t k = 1; k <= m; ++k) {
    std::vector<GaussianRational> e(m, GaussianRational(0));
    e[m - k] = GaussianRational(1);  // h_{m-k+1}
    if (linear_part(e)[k - 1].is_zero()) report.leading_nonzero = false;
  }

  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::vector<GaussianRational> h1, h2, sum, scaled;
    GaussianRational alpha;
    do {
      alpha = random_gaussian_integer(rng, 4);
    } while (alpha.is_zero());
    for (std::size_t i = 0; i < m; ++i) {
      h1.push_back(random_gaussian_integer(rng, 3));
      h2.push_back(random_gaussian_integer(rng, 3));
      sum.push_back(h1.back() + h2.back());
      scaled.push_back(alpha * h1.back());
    }
    const auto l1 = linear_part(h1);
    const auto l2 = linear_part(h2);
    const auto ls = linear_part(sum);
    const auto la = linear_part(scaled);
    for (std::size_t k = 0; k < n; ++k) {
      if (!(ls[k] == l1[k] + l2[k])) report.additive = false;
      if (!(la[k] == alpha * l1[k])) report.homogeneous = false;
    }
  }
  return report;
}

Matrix<ExactPolynomial> CurveSpec::as_polynomial_matrix() const {
  if (coefficients.empty()) throw std::invalid_argument("curve has no coefficients");
  const std::size_t n = coefficients.front().rows();
  Matrix<ExactPolynomial> out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<GaussianRational> c;
      for (const auto& m : coefficients) {
        if (m.rows() != n || m.cols() != n) throw std::invalid_argument("curve coefficients differ in size");
        c.push_back(m(i, j));
      }
      out(i, j) = ExactPolynomial(std::move(c));
    }
  }
  return out;
}

CurveSpec random_linear_curve(const ExactMatrix& b, std::uint64_t seed, int magnitude) {
  require_square(b, "random_linear_curve");
  std::mt19937_64 rng(seed);
  ExactMatrix m(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) = random_gaussian_integer(rng, magnitude);
  return {{b, m}};
}

ExactPolynomial p_bracket_along_curve(const CurveSpec& curve, int k, const GaussianRational& lambda) {
  const auto sigma = symmetrize(curve.as_polynomial_matrix());
  return p_bracket_eval(sigma, k, ExactPolynomial(lambda));
}

namespace {

void require_curve_base(const JordanSpec& spec, const CurveSpec& curve) {
  if (curve.coefficients.empty() || !(curve.coefficients.front() == build_jordan(spec))) {
    throw std::invalid_argument("curve does not start at the Jordan matrix of the spec");
  }
}

VanishingOrder classify(const JordanSpec& spec, const SymPoint<ExactPolynomial>& sigma, const GaussianRational& lambda,
                        int k) {
  const auto comb = jordan_combinatorics(spec, lambda);
  if (k < 0 || k >= comb.multiplicity) {
    throw std::invalid_argument("order_of_vanishing: k must lie in [0, m_lambda - 1]");
  }
  VanishingOrder out;
  out.lambda = lambda;
  out.k = k;
  out.required = comb.required_order(k);
  out.observed = p_bracket_eval(sigma, k, ExactPolynomial(lambda)).order();
  out.passes = !out.observed || *out.observed >= static_cast<std::size_t>(out.required);
  return out;
}

}  // namespace

VanishingOrder order_of_vanishing(const JordanSpec& spec, const CurveSpec& curve, const GaussianRational& lambda,
                                  int k) {
  spec.validate();
  require_curve_base(spec, curve);
  return classify(spec, symmetrize(curve.as_polynomial_matrix()), lambda, k);
}

std::vector<VanishingOrder> vanishing_profile(const JordanSpec& spec, const CurveSpec& curve) {
  spec.validate();
  require_curve_base(spec, curve);
  const auto sigma = symmetrize(curve.as_polynomial_matrix());
  std::vector<VanishingOrder> out;
  for (const auto& group : spec.blocks) {
    for (int k = 0; k < group.multiplicity(); ++k) out.push_back(classify(spec, sigma, group.eigenvalue, k));
  }
  return out;
}

DerivativeIdentityReport derivative_identity_check(const ExactMatrix& m, const GaussianRational& lambda) {
  require_square(m, "derivative_identity_check");
  const std::size_t n = m.rows();
  const auto sigma_m = symmetrize(m);
  const auto sigma_shift = symmetrize(ExactMatrix::identity(n) * lambda - m);
  auto sigma_of_shift = [&](std::size_t j) { return j == 0 ? GaussianRational(1) : sigma_shift[j - 1]; };

  DerivativeIdentityReport report;
  for (std::size_t k = 0; k <= n; ++k) {
    const GaussianRational lhs = p_bracket_eval(sigma_m, static_cast<int>(k), lambda);
    const GaussianRational kf = factorial(static_cast<int>(k));
    if (!(lhs == kf * sigma_of_shift(n - k))) report.corrected_index_holds = false;
    if (k >= 1 && !(lhs == kf * sigma_of_shift(k))) report.literal_index_holds = false;
  }
  return report;
}

}  // namespace symrank
