#include "symrank/jacobian.hpp"

#include "symrank/linalg.hpp"

namespace symrank {

SymPoint<ComplexFloat> directional_fd(const FloatMatrix& b, const FloatMatrix& m, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite difference step must be positive");
  require_square(b, "directional_fd");
  const ComplexFloat step(h);
  const auto plus = symmetrize(b + m * step);
  const auto minus = symmetrize(b - m * step);
  SymPoint<ComplexFloat> out;
  for (std::size_t k = 0; k < plus.size(); ++k) out.sigma.push_back((plus[k] - minus[k]) / (2.0 * h));
  return out;
}

JacobianMatrix<ComplexFloat> jacobian_fd(const FloatMatrix& b, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite difference step must be positive");
  require_square(b, "jacobian_fd");
  const std::size_t n = b.rows();
  JacobianMatrix<ComplexFloat> jac{n, FloatMatrix(n, n * n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto col = directional_fd(b, FloatMatrix::unit(n, i, j), h);
      for (std::size_t k = 0; k < n; ++k) jac.entries(k, i * n + j) = col[k];
    }
  }
  return jac;
}

TheoremReport verify_theorem(const JordanSpec& spec, std::uint64_t seed) {
  spec.validate();
  const ExactMatrix b = build_jordan(spec);
  TheoremReport report;
  report.spec = spec;
  report.n = b.rows();
  report.min_poly_degree = min_poly_degree(spec);
  report.rank = rank_exact(jacobian_exact(b).entries);
  report.conjugated_rank = rank_exact(jacobian_exact(random_similarity(b, seed)).entries);
  report.conjugation_checked = true;
  report.in_spectral_ball = in_spectral_ball(map_entries<ComplexFloat>(b, [](const auto& x) { return to_float(x); }));
  const auto m = static_cast<std::size_t>(report.min_poly_degree);
  report.theorem_holds = report.rank == m && report.conjugated_rank == m;
  return report;
}

}  // namespace symrank
