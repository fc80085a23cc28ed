#ifndef SYMRANK_MATRIX_HPP
#define SYMRANK_MATRIX_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symrank {

/// Dense row-major matrix over a commutative ring S.
///
/// S only needs +, -, * and construction from an integer, so the same
/// container carries scalar matrices and matrices over polynomial rings
/// (curves B + zeta*M in the vanishing-order checks).
template <class S>
class Matrix {
 public:
  using value_type = S;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<S> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw std::invalid_argument("matrix data size mismatch");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  /// Matrix unit E_ij: a single one at (i, j), zero-based.
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(n, n);
    m(i, j) = S(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const S> data() const { return data_; }
  std::span<const S> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const S& c) {
    for (auto& x : data_) x *= c;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const S& c) { return a *= c; }
  friend Matrix operator*(const S& c, Matrix a) { return a *= c; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (aik == S(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    }
    return c;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

template <class S>
S trace(const Matrix<S>& m) {
  if (!m.is_square()) throw std::invalid_argument("trace of a non-square matrix");
  S t(0);
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

template <class S>
Matrix<S> transpose(const Matrix<S>& m) {
  Matrix<S> t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

/// Entrywise conversion, e.g. exact -> float.
template <class T, class S, class Fn>
Matrix<T> map_entries(const Matrix<S>& m, Fn&& fn) {
  std::vector<T> out;
  out.reserve(m.rows() * m.cols());
  for (const auto& x : m.data()) out.push_back(fn(x));
  return Matrix<T>(m.rows(), m.cols(), std::move(out));
}

/// Block-diagonal assembly of square blocks.
template <class S>
Matrix<S> block_diagonal(const std::vector<Matrix<S>>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) {
    if (!b.is_square()) throw std::invalid_argument("block_diagonal expects square blocks");
    n += b.rows();
  }
  Matrix<S> m(n, n);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(offset + i, offset + j) = b(i, j);
    offset += b.rows();
  }
  return m;
}

template <class S>
void require_square(const Matrix<S>& m, const char* what) {
  if (!m.is_square() || m.rows() == 0) {
    throw std::invalid_argument(std::string(what) + ": expected a non-empty square matrix");
  }
}

}  // namespace symrank

#endif  // SYMRANK_MATRIX_HPP
