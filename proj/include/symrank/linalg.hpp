#ifndef SYMRANK_LINALG_HPP
#define SYMRANK_LINALG_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "symrank/matrix.hpp"
#include "symrank/scalars.hpp"

namespace symrank {

namespace detail {

/// Fraction-free (Bareiss) elimination with full pivoting, in place.
/// Returns the rank and the sign of the row/column permutation applied.
template <ExactField F>
std::pair<std::size_t, int> bareiss_eliminate(Matrix<F>& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  F previous(1);
  int sign = 1;
  std::size_t rank = 0;
  for (std::size_t k = 0; k < rows && k < cols; ++k) {
    std::size_t pr = rows;
    std::size_t pc = cols;
    for (std::size_t i = k; i < rows && pr == rows; ++i) {
      for (std::size_t j = k; j < cols; ++j) {
        if (!a(i, j).is_zero()) {
          pr = i;
          pc = j;
          break;
        }
      }
    }
    if (pr == rows) break;
    if (pr != k) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(pr, j), a(k, j));
      sign = -sign;
    }
    if (pc != k) {
      for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, pc), a(i, k));
      sign = -sign;
    }
    const F pivot = a(k, k);
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        a(i, j) = (pivot * a(i, j) - a(i, k) * a(k, j)) / previous;
      }
      a(i, k) = F(0);
    }
    previous = pivot;
    ++rank;
  }
  return {rank, sign};
}

}  // namespace detail

/// Exact rank by fraction-free elimination with full pivoting.
template <ExactField F>
std::size_t rank_exact(Matrix<F> a) {
  return detail::bareiss_eliminate(a).first;
}

/// Exact determinant; after Bareiss elimination the last pivot is the
/// determinant up to the permutation sign.
template <ExactField F>
F determinant(Matrix<F> a) {
  require_square(a, "determinant");
  const auto [rank, sign] = detail::bareiss_eliminate(a);
  if (rank < a.rows()) return F(0);
  const F& last = a(a.rows() - 1, a.cols() - 1);
  return sign > 0 ? last : -last;
}

/// Solves A x = b exactly; nullopt if inconsistent. Free variables are set to zero.
template <ExactField F>
std::optional<std::vector<F>> solve_exact(const Matrix<F>& a, const std::vector<F>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_exact: rhs length mismatch");
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  Matrix<F> aug(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug(i, j) = a(i, j);
    aug(i, cols) = b[i];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && aug(p, c).is_zero()) ++p;
    if (p == rows) continue;
    for (std::size_t j = 0; j <= cols; ++j) std::swap(aug(p, j), aug(r, j));
    const F inv = F(1) / aug(r, c);
    for (std::size_t j = c; j <= cols; ++j) aug(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || aug(i, c).is_zero()) continue;
      const F f = aug(i, c);
      for (std::size_t j = c; j <= cols; ++j) aug(i, j) -= f * aug(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!aug(i, cols).is_zero()) return std::nullopt;
  }
  std::vector<F> x(cols, F(0));
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = aug(i, cols);
  return x;
}

/// Matrix whose rows are the given vectors.
template <class S>
Matrix<S> stack_rows(const std::vector<std::vector<S>>& rows, std::size_t width) {
  Matrix<S> m(rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != width) throw std::invalid_argument("stack_rows: ragged input");
    for (std::size_t j = 0; j < width; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

/// Numerical rank with the singular values that decided it.
struct NumericRank {
  std::size_t rank = 0;
  double threshold = 0.0;
  std::vector<double> singular_values;  // descending
  /// Distance from the threshold to the nearest singular value; a small gap
  /// flags a near-tie in the rank decision.
  double gap = 0.0;
};

/// Counts singular values above tol, or above max(rows, cols) * eps * s_max
/// when tol is not given.
NumericRank rank_numeric(const Matrix<ComplexFloat>& a, std::optional<double> tol = std::nullopt);

}  // namespace symrank

#endif  // SYMRANK_LINALG_HPP
