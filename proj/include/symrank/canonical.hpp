#ifndef SYMRANK_CANONICAL_HPP
#define SYMRANK_CANONICAL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "symrank/linalg.hpp"
#include "symrank/matpoly.hpp"
#include "symrank/matrix.hpp"
#include "symrank/polynomial.hpp"
#include "symrank/scalars.hpp"

namespace symrank {

using ExactMatrix = Matrix<GaussianRational>;
using FloatMatrix = Matrix<ComplexFloat>;
using ExactPolynomial = Polynomial<GaussianRational>;

/// Elementary Jordan blocks sharing one eigenvalue, sizes ascending.
struct JordanBlockGroup {
  GaussianRational eigenvalue;
  std::vector<int> sizes;

  /// Algebraic multiplicity m_lambda.
  int multiplicity() const;
  /// Largest elementary block s_lambda.
  int largest() const { return sizes.empty() ? 0 : sizes.back(); }

  friend bool operator==(const JordanBlockGroup&, const JordanBlockGroup&) = default;
};

/// Structural description of a matrix in Jordan normal form. Eigenvalue
/// groups keep their input order; blocks within a group ascend in size.
struct JordanSpec {
  int n = 0;
  std::vector<JordanBlockGroup> blocks;

  /// Throws std::invalid_argument naming the first violated invariant.
  void validate() const;
  const JordanBlockGroup& group(const GaussianRational& lambda) const;
  std::string str() const;

  friend bool operator==(const JordanSpec&, const JordanSpec&) = default;
};

/// Invariant factors p_1 | p_2 | ... | p_l, ascending degree, all monic.
struct FrobeniusSpec {
  std::vector<ExactPolynomial> invariant_factors;

  void validate() const;
  int n() const;
  const ExactPolynomial& minimal_polynomial() const { return invariant_factors.back(); }

  friend bool operator==(const FrobeniusSpec&, const FrobeniusSpec&) = default;
};

/// Block-start bookkeeping for one eigenvalue of a Jordan matrix.
///
/// Positions are one-based inside the lambda-superblock. block_starts holds
/// F0 = {j : b_{j-1,j} = 0} = {1 = b_1 < ... < b_s}, and
/// d[i-1] = 1 + #(F0 intersect [m - i + 2, m]) for i = 1..m.
struct JordanCombinatorics {
  int multiplicity = 0;
  std::vector<int> block_starts;
  int block_count = 0;
  int last_block_start = 0;
  int largest_block = 0;
  std::vector<int> d;

  /// d_i, one-based.
  int d_at(int i) const { return d.at(static_cast<std::size_t>(i - 1)); }
  /// Required vanishing order of the k-th derivative at lambda: d_{m-k}.
  int required_order(int k) const { return d_at(multiplicity - k); }
};

ExactMatrix build_jordan(const JordanSpec& spec);
int min_poly_degree(const JordanSpec& spec);
JordanCombinatorics jordan_combinatorics(const JordanSpec& spec, const GaussianRational& lambda);
FrobeniusSpec jordan_to_frobenius(const JordanSpec& spec);
ExactMatrix build_frobenius(const FrobeniusSpec& spec);

/// Companion matrix: ones on the superdiagonal, last row (-c_0, ..., -c_{m-1}).
template <Field F>
Matrix<F> build_companion(const Polynomial<F>& p) {
  if (p.degree() < 1) throw std::invalid_argument("build_companion: degree must be at least 1");
  if (!p.is_monic()) throw std::invalid_argument("build_companion: polynomial must be monic");
  const auto m = static_cast<std::size_t>(p.degree());
  Matrix<F> c(m, m);
  for (std::size_t i = 0; i + 1 < m; ++i) c(i, i + 1) = F(1);
  for (std::size_t j = 0; j < m; ++j) c(m - 1, j) = -p.coeff(j);
  return c;
}

/// Monic polynomial of least degree annihilating m, from the first linear
/// dependence among vec(I), vec(M), vec(M^2), ...
template <ExactField F>
Polynomial<F> min_poly_krylov(const Matrix<F>& m) {
  require_square(m, "min_poly_krylov");
  const std::size_t n = m.rows();
  std::vector<Matrix<F>> powers{Matrix<F>::identity(n)};
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<F> next = m * powers.back();
    Matrix<F> basis(n * n, k);
    for (std::size_t c = 0; c < k; ++c) {
      const auto flat = powers[c].data();
      for (std::size_t r = 0; r < n * n; ++r) basis(r, c) = flat[r];
    }
    const auto target = next.data();
    if (auto x = solve_exact(basis, std::vector<F>(target.begin(), target.end()))) {
      // M^k = sum_c x_c M^c  =>  t^k - sum_c x_c t^c annihilates M.
      std::vector<F> coeffs(k + 1, F(0));
      for (std::size_t c = 0; c < k; ++c) coeffs[c] = -(*x)[c];
      coeffs[k] = F(1);
      return Polynomial<F>(std::move(coeffs));
    }
    powers.push_back(std::move(next));
  }
  throw std::logic_error("min_poly_krylov: no dependence found by degree n");
}

/// Degree estimate for floating matrices: first k with
/// rank[I, M, ..., M^k] = rank[I, ..., M^{k-1}] at the given tolerance.
std::size_t min_poly_degree_numeric(const FloatMatrix& m, std::optional<double> tol = std::nullopt);

/// Integer unimodular Q (a product of elementary shears, det Q = 1) with its exact inverse.
struct Unimodular {
  ExactMatrix q;
  ExactMatrix q_inverse;
};

/// Random product of 2n shears I + c E_ij with |c| <= magnitude.
Unimodular random_unimodular(std::size_t n, std::uint64_t seed, int magnitude = 2);

/// Q M Q^{-1} for the unimodular Q drawn from seed.
ExactMatrix random_similarity(const ExactMatrix& m, std::uint64_t seed, int magnitude = 2);

}  // namespace symrank

#endif  // SYMRANK_CANONICAL_HPP
