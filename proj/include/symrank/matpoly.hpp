#ifndef SYMRANK_MATPOLY_HPP
#define SYMRANK_MATPOLY_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "symrank/matrix.hpp"
#include "symrank/polynomial.hpp"
#include "symrank/scalars.hpp"

namespace symrank {

/// Point of C^n holding (sigma_1, ..., sigma_n): the coefficients of the
/// characteristic polynomial with the alternating sign stripped, so that
/// det(tI - M) = sum_j (-1)^j sigma_j t^{n-j} with sigma_0 = 1.
template <class S>
struct SymPoint {
  std::vector<S> sigma;

  std::size_t size() const { return sigma.size(); }
  const S& operator[](std::size_t j) const { return sigma[j]; }
  friend bool operator==(const SymPoint&, const SymPoint&) = default;
};

template <class S>
struct CharPolyResult {
  Polynomial<S> char_poly;       // det(tI - M), monic of degree n
  MatrixPolynomial<S> adjugate;  // adj(tI - M), degree n - 1
};

/// Faddeev-LeVerrier recursion. Works over any commutative ring in which
/// division by 1..n is exact (Q(i), C, and polynomial rings over those).
template <class S>
CharPolyResult<S> faddeev_leverrier(const Matrix<S>& m) {
  require_square(m, "faddeev_leverrier");
  const std::size_t n = m.rows();
  std::vector<S> c(n + 1, S(0));
  c[n] = S(1);

  MatrixPolynomial<S> adj{n, std::vector<Matrix<S>>(n, Matrix<S>(n, n))};
  Matrix<S> mk = Matrix<S>::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      mk = m * mk;
      for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    }
    adj.coefficients[n - k] = mk;
    c[n - k] = -div_by_int(trace(m * mk), static_cast<long>(k));
    if (!is_finite(c[n - k])) throw NumericError("characteristic polynomial overflowed");
  }
  return {Polynomial<S>(std::move(c)), std::move(adj)};
}

template <class S>
Polynomial<S> char_poly(const Matrix<S>& m) {
  return faddeev_leverrier(m).char_poly;
}

template <class S>
MatrixPolynomial<S> adjugate_poly(const Matrix<S>& m) {
  return faddeev_leverrier(m).adjugate;
}

/// Reads (sigma_1..sigma_n) off a monic degree-n characteristic polynomial.
template <class S>
SymPoint<S> sym_point_from_char_poly(const Polynomial<S>& p, std::size_t n) {
  SymPoint<S> out;
  out.sigma.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) {
    S c = p.coeff(n - j);
    out.sigma.push_back(j % 2 == 0 ? c : -c);
  }
  return out;
}

/// The symmetrization map M -> (sigma_1(M), ..., sigma_n(M)).
template <class S>
SymPoint<S> symmetrize(const Matrix<S>& m) {
  return sym_point_from_char_poly(char_poly(m), m.rows());
}

/// P_[v](t) = sum_{j=0}^n (-1)^j v_j t^{n-j}, v_0 = 1.
template <class S>
Polynomial<S> p_bracket(const SymPoint<S>& v) {
  const std::size_t n = v.size();
  std::vector<S> c(n + 1, S(0));
  c[n] = S(1);
  for (std::size_t j = 1; j <= n; ++j) c[n - j] = j % 2 == 0 ? v[j - 1] : -v[j - 1];
  return Polynomial<S>(std::move(c));
}

/// k-th derivative of P_[v] evaluated at t. Zero for k > n.
template <class S>
S p_bracket_eval(const SymPoint<S>& v, int k, const S& t) {
  if (k < 0) throw std::invalid_argument("p_bracket_eval: negative derivative order");
  return p_bracket(v).derivative(k)(t);
}

/// v^{(k)}(lambda) for v(t) = (-t^{n-1}, t^{n-2}, ..., (-1)^n). Component j
/// (one-based) is (-1)^j d^k/dt^k t^{n-j}.
template <class S>
std::vector<S> v_vector(std::size_t n, int k, const S& lambda) {
  if (k < 0) throw std::invalid_argument("v_vector: negative derivative order");
  std::vector<S> out;
  out.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) {
    const long power = static_cast<long>(n - j);
    S value(0);
    if (power >= k) {
      long falling = 1;
      for (long r = 0; r < k; ++r) falling *= power - r;
      S pw(1);
      for (long r = 0; r < power - k; ++r) pw = pw * lambda;
      value = S(falling) * pw;
    }
    out.push_back(j % 2 == 0 ? value : -value);
  }
  return out;
}

/// Unconjugated bilinear form sum_j u_j w_j.
template <class S>
S dot(std::span<const S> u, std::span<const S> w) {
  if (u.size() != w.size()) throw std::invalid_argument("dot: length mismatch");
  S acc(0);
  for (std::size_t j = 0; j < u.size(); ++j) acc += u[j] * w[j];
  return acc;
}

template <class S>
S dot(const std::vector<S>& u, const std::vector<S>& w) {
  return dot(std::span<const S>(u), std::span<const S>(w));
}

/// Upper bound on the spectral radius from ||M^(2^k)||^(1/2^k) in the
/// max-row-sum norm, minimised over k = 0..iterations. The iterate is
/// rescaled at every squaring and the scale is tracked in log space.
double spectral_radius_bound(const Matrix<ComplexFloat>& m, int iterations);

/// Diagnostic flag: r(M) < 1 as certified by spectral_radius_bound.
inline bool in_spectral_ball(const Matrix<ComplexFloat>& m, int iterations = 40) {
  return spectral_radius_bound(m, iterations) < 1.0;
}

}  // namespace symrank

#endif  // SYMRANK_MATPOLY_HPP
