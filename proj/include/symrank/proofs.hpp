#ifndef SYMRANK_PROOFS_HPP
#define SYMRANK_PROOFS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "symrank/canonical.hpp"
#include "symrank/jacobian.hpp"
#include "symrank/matpoly.hpp"
#include "symrank/polynomial.hpp"
#include "symrank/scalars.hpp"

namespace symrank {

// ---------------------------------------------------------------------------
// Upper bound: explicit linear equations cutting out the image of pi'(B).
// ---------------------------------------------------------------------------

struct NullspaceVector {
  GaussianRational lambda;
  int k = 0;
  std::vector<GaussianRational> v;  // v^{(k)}(lambda)
};

/// The vectors v^{(k)}(lambda), 0 <= k <= m_lambda - s_lambda - 1, one family
/// per eigenvalue; n - m of them in total.
struct NullspaceCertificate {
  std::size_t n = 0;
  std::vector<NullspaceVector> vectors;
};

NullspaceCertificate nullspace_basis(const JordanSpec& spec);

/// True iff every certificate vector is orthogonal (unconjugated) to every
/// column of jacobian_exact(b).
bool verify_annihilation(const NullspaceCertificate& cert, const ExactMatrix& b);

/// Exact rank of the matrix whose rows are the certificate vectors.
std::size_t certificate_rank(const NullspaceCertificate& cert);

// ---------------------------------------------------------------------------
// Divided differences and confluent Vandermonde determinants.
// ---------------------------------------------------------------------------

/// One interpolation node with f(node), f'(node), ... as available.
template <class F>
struct HermiteDatum {
  F node;
  std::vector<F> derivatives;  // derivatives[r] = f^{(r)}(node)
};

/// Newton divided difference f[x_0, ..., x_N] on possibly repeated nodes.
/// A node repeated r times needs derivatives up to order r - 1, supplied on
/// any of its occurrences; confluent entries use f^{(j)}(x) / j!.
template <Field F>
F divided_difference(std::span<const HermiteDatum<F>> data) {
  if (data.empty()) throw std::invalid_argument("divided_difference: no nodes");

  // Group equal nodes contiguously (first-appearance order) and keep the
  // longest derivative list seen for each.
  std::vector<F> distinct;
  std::vector<std::vector<F>> derivs;
  std::vector<std::size_t> multiplicity;
  for (const auto& d : data) {
    auto it = std::find(distinct.begin(), distinct.end(), d.node);
    const auto g = static_cast<std::size_t>(it - distinct.begin());
    if (it == distinct.end()) {
      distinct.push_back(d.node);
      derivs.push_back(d.derivatives);
      multiplicity.push_back(1);
    } else {
      ++multiplicity[g];
      if (d.derivatives.size() > derivs[g].size()) derivs[g] = d.derivatives;
    }
  }
  std::vector<F> z;
  std::vector<std::size_t> group_of;
  for (std::size_t g = 0; g < distinct.size(); ++g) {
    if (derivs[g].size() < multiplicity[g]) {
      throw std::invalid_argument("divided_difference: node repeated " + std::to_string(multiplicity[g]) +
                                  " times needs derivatives up to order " + std::to_string(multiplicity[g] - 1));
    }
    for (std::size_t r = 0; r < multiplicity[g]; ++r) {
      z.push_back(distinct[g]);
      group_of.push_back(g);
    }
  }

  const std::size_t count = z.size();
  std::vector<F> table(count);
  for (std::size_t i = 0; i < count; ++i) table[i] = derivs[group_of[i]][0];
  F factorial(1);
  // After pass j, table[i] = f[z_i, ..., z_{i+j}].
  for (std::size_t j = 1; j < count; ++j) {
    factorial = factorial * F(static_cast<long>(j));
    for (std::size_t i = 0; i + j < count; ++i) {
      if (z[i] == z[i + j]) {
        table[i] = derivs[group_of[i]][j] / factorial;
      } else {
        table[i] = (table[i + 1] - table[i]) / (z[i + j] - z[i]);
      }
    }
  }
  return table[0];
}

template <Field F>
F divided_difference(const std::vector<HermiteDatum<F>>& data) {
  return divided_difference(std::span<const HermiteDatum<F>>(data));
}

/// Errors of k! v[lambda, lambda+eps, ..., lambda+k*eps] against v^{(k)}(lambda).
struct GenocchiHermiteReport {
  std::vector<double> eps;
  std::vector<double> errors;  // max componentwise modulus
  std::vector<double> ratios;  // errors[i] / errors[i+1]
  bool passes = false;
};

/// Componentwise k! times the divided difference of v on the nodes
/// lambda + r*eps, r = 0..k.
template <Field F>
std::vector<F> scaled_divided_difference_of_v(std::size_t n, int k, const F& lambda, const F& eps) {
  std::vector<F> out(n, F(0));
  F factorial(1);
  for (int r = 2; r <= k; ++r) factorial = factorial * F(static_cast<long>(r));
  std::vector<std::vector<F>> samples;
  std::vector<F> nodes;
  for (int r = 0; r <= k; ++r) {
    nodes.push_back(lambda + F(static_cast<long>(r)) * eps);
    samples.push_back(v_vector<F>(n, 0, nodes.back()));
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<HermiteDatum<F>> data;
    for (int r = 0; r <= k; ++r) data.push_back({nodes[static_cast<std::size_t>(r)], {samples[static_cast<std::size_t>(r)][j]}});
    out[j] = factorial * divided_difference(data);
  }
  return out;
}

/// Convergence of the confluent limit. Passes when, between consecutive
/// eps values, the error drops by at least min_ratio per decade of eps, or
/// both errors are already at or below noise_floor.
template <Field F>
GenocchiHermiteReport genocchi_hermite_check(std::size_t n, int k, const F& lambda, const std::vector<F>& eps_values,
                                             double min_ratio = 8.0, double noise_floor = 0.0) {
  if (k < 0 || static_cast<std::size_t>(k) >= n) throw std::invalid_argument("genocchi_hermite_check: need 0 <= k <= n-1");
  GenocchiHermiteReport report;
  const std::vector<F> exact = v_vector<F>(n, k, lambda);
  for (const F& eps : eps_values) {
    const auto approx = scaled_divided_difference_of_v<F>(n, k, lambda, eps);
    double err = 0.0;
    for (std::size_t j = 0; j < n; ++j) err = std::max(err, magnitude(approx[j] - exact[j]));
    report.eps.push_back(magnitude(eps));
    report.errors.push_back(err);
  }
  report.passes = true;
  for (std::size_t i = 0; i + 1 < report.errors.size(); ++i) {
    const double a = report.errors[i];
    const double b = report.errors[i + 1];
    report.ratios.push_back(b > 0.0 ? a / b : (a > 0.0 ? std::numeric_limits<double>::infinity() : 1.0));
    if (a <= noise_floor && b <= noise_floor) continue;
    const double decades = std::log10(report.eps[i] / report.eps[i + 1]);
    if (!(a >= b * std::pow(min_ratio, decades))) report.passes = false;
  }
  return report;
}

struct VandermondeCluster {
  GaussianRational lambda;
  int multiplicity = 1;
};

/// Direct determinant of [v(l), v'(l), ..., v^{(r-1)}(l), ...] against the
/// closed form prod_clusters prod_{j<r} j! * prod_{a<b} (l_b - l_a)^{r_a r_b}.
struct ConfluentVandermondeReport {
  GaussianRational direct;
  GaussianRational closed_form;
  Rational direct_abs_squared;
  Rational closed_form_abs_squared;
  int sign = 0;  // direct / closed_form when that ratio is +1 or -1, else 0
  bool abs_equal = false;
};

ExactMatrix confluent_vandermonde_matrix(const std::vector<VandermondeCluster>& clusters);
ConfluentVandermondeReport confluent_vandermonde_det(const std::vector<VandermondeCluster>& clusters);

// ---------------------------------------------------------------------------
// Lower bound: echelon tangent vectors from the rational canonical form.
// ---------------------------------------------------------------------------

struct TangentCertificate {
  std::vector<std::size_t> h_index;   // one-based i with h_i = 1
  std::vector<ExactMatrix> directions;
  std::vector<std::vector<GaussianRational>> images;
  std::vector<int> pivots;            // one-based first nonzero component, 0 if none
  std::size_t rank = 0;
  bool echelon = false;  // pivot of image i at component m - i + 1
  bool passes = false;
};

/// Perturbation supported on the last row of the final companion block:
/// entry (n-1, n-m+i-1) = -h_i.
ExactMatrix tangent_direction(std::size_t n, std::size_t m, const std::vector<GaussianRational>& h);

TangentCertificate tangent_construction(const FrobeniusSpec& fspec);

struct SigmaLinearityReport {
  bool degree_at_most_one = true;  // sigma_k(B + zeta H) is affine in zeta
  bool additive = true;
  bool homogeneous = true;
  bool zero_direction_fixes = true;
  bool leading_nonzero = true;  // coefficient on h_{m-k+1} nonzero, 1 <= k <= m
  bool passes() const {
    return degree_at_most_one && additive && homogeneous && zero_direction_fixes && leading_nonzero;
  }
};

SigmaLinearityReport sigma_linearity_check(const FrobeniusSpec& fspec, int trials, std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Vanishing order along polynomial curves.
// ---------------------------------------------------------------------------

/// Phi(zeta) = sum_d coefficients[d] zeta^d; coefficients[0] is Phi(0).
struct CurveSpec {
  std::vector<ExactMatrix> coefficients;

  Matrix<ExactPolynomial> as_polynomial_matrix() const;
};

/// B + zeta M with M drawn from small Gaussian integers.
CurveSpec random_linear_curve(const ExactMatrix& b, std::uint64_t seed, int magnitude = 3);

struct VanishingOrder {
  GaussianRational lambda;
  int k = 0;
  std::optional<std::size_t> observed;  // nullopt = identically zero
  int required = 0;
  bool passes = false;
};

/// P^{(k)}_{[pi(Phi(zeta))]}(lambda) as an exact polynomial in zeta.
ExactPolynomial p_bracket_along_curve(const CurveSpec& curve, int k, const GaussianRational& lambda);

VanishingOrder order_of_vanishing(const JordanSpec& spec, const CurveSpec& curve, const GaussianRational& lambda, int k);

/// order_of_vanishing for every eigenvalue and every 0 <= k < m_lambda.
std::vector<VanishingOrder> vanishing_profile(const JordanSpec& spec, const CurveSpec& curve);

// ---------------------------------------------------------------------------
// Derivative identity for P_[pi(M)].
// ---------------------------------------------------------------------------

struct DerivativeIdentityReport {
  bool corrected_index_holds = true;  // P^{(k)}(lambda) = k! sigma_{n-k}(lambda I - M), all k <= n
  bool literal_index_holds = true;    // same with sigma_k, 1 <= k <= n
};

DerivativeIdentityReport derivative_identity_check(const ExactMatrix& m, const GaussianRational& lambda);

}  // namespace symrank

#endif  // SYMRANK_PROOFS_HPP
