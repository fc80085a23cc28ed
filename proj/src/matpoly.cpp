#include "symrank/matpoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace symrank {

namespace {

double max_row_sum(const Matrix<ComplexFloat>& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double s = 0.0;
    for (const auto& x : m.row(i)) s += std::abs(x);
    best = std::max(best, s);
  }
  return best;
}

}  // namespace

double spectral_radius_bound(const Matrix<ComplexFloat>& m, int iterations) {
  require_square(m, "spectral_radius_bound");
  if (iterations < 0) throw std::invalid_argument("spectral_radius_bound: negative iteration count");
  for (const auto& x : m.data()) {
    if (!is_finite(x)) throw NumericError("spectral_radius_bound: non-finite matrix entry");
  }

  // Invariant: M^(2^k) = exp(log_scale) * power.
  Matrix<ComplexFloat> power = m;
  double log_scale = 0.0;
  double best = std::numeric_limits<double>::infinity();
  double exponent = 1.0;  // 2^k
  for (int k = 0; k <= iterations; ++k) {
    const double norm = max_row_sum(power);
    if (norm == 0.0) return 0.0;
    if (!std::isfinite(norm)) throw NumericError("spectral_radius_bound overflowed");
    best = std::min(best, std::exp((log_scale + std::log(norm)) / exponent));
    if (k == iterations) break;
    power *= ComplexFloat(1.0 / norm);
    log_scale += std::log(norm);
    power = power * power;
    log_scale *= 2.0;
    exponent *= 2.0;
  }
  return best;
}

}  // namespace symrank
