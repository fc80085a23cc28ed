#ifndef SYMRANK_JACOBIAN_HPP
#define SYMRANK_JACOBIAN_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "symrank/canonical.hpp"
#include "symrank/matpoly.hpp"
#include "symrank/matrix.hpp"
#include "symrank/scalars.hpp"

namespace symrank {

/// Matrix of the derivative of the symmetrization map at B: n rows
/// (d sigma_1 .. d sigma_n) by n^2 columns. The direction E_ij (zero-based)
/// is column i*n + j, i.e. row-major vectorization.
template <class F>
struct JacobianMatrix {
  std::size_t n = 0;
  Matrix<F> entries;

  static std::size_t column_of(std::size_t n, std::size_t i, std::size_t j) { return i * n + j; }

  std::vector<F> column(std::size_t c) const {
    std::vector<F> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) out.push_back(entries(k, c));
    return out;
  }
};

namespace detail {

/// (-1)^{k+1} for one-based k.
template <class F>
F differential_sign(std::size_t k) {
  return k % 2 == 1 ? F(1) : F(-1);
}

}  // namespace detail

/// First-order term of sigma(B + eps M). From
/// det(tI - B - eps M) = P_B(t) - eps tr(adj(tI - B) M) + O(eps^2),
/// component k is (-1)^{k+1} [t^{n-k}] tr(adj(tI - B) M).
template <Field F>
SymPoint<F> directional_derivative(const Matrix<F>& b, const Matrix<F>& m) {
  require_square(b, "directional_derivative");
  if (m.rows() != b.rows() || m.cols() != b.cols()) {
    throw std::invalid_argument("directional_derivative: direction has a different size");
  }
  const std::size_t n = b.rows();
  const MatrixPolynomial<F> adj = adjugate_poly(b);
  SymPoint<F> out;
  for (std::size_t k = 1; k <= n; ++k) {
    out.sigma.push_back(detail::differential_sign<F>(k) * trace(adj.coefficients[n - k] * m));
  }
  return out;
}

/// Analytic Jacobian. Column E_ij picks tr(A E_ij) = A(j, i) from each
/// adjugate coefficient, so no matrix products are needed per column.
template <Field F>
JacobianMatrix<F> jacobian_exact(const Matrix<F>& b) {
  require_square(b, "jacobian_exact");
  const std::size_t n = b.rows();
  const MatrixPolynomial<F> adj = adjugate_poly(b);
  JacobianMatrix<F> jac{n, Matrix<F>(n, n * n)};
  for (std::size_t k = 1; k <= n; ++k) {
    const Matrix<F>& a = adj.coefficients[n - k];
    const F sign = detail::differential_sign<F>(k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) jac.entries(k - 1, i * n + j) = sign * a(j, i);
  }
  return jac;
}

/// Central difference (pi(B + hM) - pi(B - hM)) / 2h.
SymPoint<ComplexFloat> directional_fd(const FloatMatrix& b, const FloatMatrix& m, double h);

/// Central-difference Jacobian along every matrix unit E_ij.
JacobianMatrix<ComplexFloat> jacobian_fd(const FloatMatrix& b, double h);

/// Outcome of checking rank pi'(B) = deg(minimal polynomial of B) for one spec.
struct TheoremReport {
  JordanSpec spec;
  std::size_t n = 0;
  int min_poly_degree = 0;
  std::size_t rank = 0;
  std::size_t conjugated_rank = 0;
  bool conjugation_checked = false;
  bool in_spectral_ball = false;  // diagnostic only
  bool theorem_holds = false;
  std::string field = "exact";
};

/// Builds B from the spec, compares the exact Jacobian rank with the
/// minimal-polynomial degree, and repeats the rank check on Q B Q^{-1}
/// for a unimodular Q drawn from seed.
TheoremReport verify_theorem(const JordanSpec& spec, std::uint64_t seed = 0);

}  // namespace symrank

#endif  // SYMRANK_JACOBIAN_HPP
