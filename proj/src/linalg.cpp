#include "symrank/linalg.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>

namespace symrank {

NumericRank rank_numeric(const Matrix<ComplexFloat>& a, std::optional<double> tol) {
  if (tol && !(*tol >= 0.0)) throw std::invalid_argument("rank_numeric: tolerance must be non-negative");
  NumericRank out;
  if (a.rows() == 0 || a.cols() == 0) return out;

  Eigen::MatrixXcd m(static_cast<Eigen::Index>(a.rows()), static_cast<Eigen::Index>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!is_finite(a(i, j))) throw NumericError("rank_numeric: non-finite matrix entry");
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(i, j);
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  out.singular_values.assign(s.data(), s.data() + s.size());
  for (double v : out.singular_values) {
    if (!std::isfinite(v)) throw NumericError("rank_numeric: SVD did not converge");
  }

  const double smax = out.singular_values.empty() ? 0.0 : out.singular_values.front();
  out.threshold = tol.value_or(static_cast<double>(std::max(a.rows(), a.cols())) *
                               std::numeric_limits<double>::epsilon() * smax);
  out.gap = std::numeric_limits<double>::infinity();
  for (double v : out.singular_values) {
    if (v > out.threshold) ++out.rank;
    out.gap = std::min(out.gap, std::abs(v - out.threshold));
  }
  return out;
}

}  // namespace symrank
