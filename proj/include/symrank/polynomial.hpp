#ifndef SYMRANK_POLYNOMIAL_HPP
#define SYMRANK_POLYNOMIAL_HPP

#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "symrank/matrix.hpp"
#include "symrank/scalars.hpp"

namespace symrank {

/// Univariate polynomial with coefficients in ascending degree.
///
/// Trailing zero coefficients are trimmed, so the zero polynomial has no
/// coefficients and degree -1.
template <class S>
class Polynomial {
 public:
  using coefficient_type = S;

  Polynomial() = default;
  Polynomial(S constant) : coeffs_{std::move(constant)} { trim(); }  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  Polynomial(I constant) : Polynomial(S(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<S> ascending) : coeffs_(std::move(ascending)) { trim(); }
  Polynomial(std::initializer_list<S> ascending) : coeffs_(ascending) { trim(); }

  /// The monomial t.
  static Polynomial variable() { return Polynomial(std::vector<S>{S(0), S(1)}); }

  /// Monic product of (t - root)^multiplicity.
  static Polynomial from_root(const S& root, int multiplicity) {
    Polynomial p(S(1));
    const Polynomial factor(std::vector<S>{-root, S(1)});
    for (int k = 0; k < multiplicity; ++k) p *= factor;
    return p;
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<S>& coefficients() const { return coeffs_; }

  /// Coefficient of t^k (zero beyond the degree).
  S coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : S(0); }
  const S& leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == S(1); }

  /// Index of the lowest nonzero coefficient; nullopt for the zero polynomial.
  std::optional<std::size_t> order() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (!(coeffs_[k] == S(0))) return k;
    return std::nullopt;
  }

  S operator()(const S& t) const {
    S acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  Polynomial derivative(int times = 1) const {
    Polynomial p = *this;
    for (int r = 0; r < times && !p.coeffs_.empty(); ++r) {
      std::vector<S> d;
      for (std::size_t k = 1; k < p.coeffs_.size(); ++k) d.push_back(p.coeffs_[k] * S(static_cast<long>(k)));
      p = Polynomial(std::move(d));
    }
    return p;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), S(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), S(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) {
    if (coeffs_.empty() || o.coeffs_.empty()) {
      coeffs_.clear();
      return *this;
    }
    std::vector<S> out(coeffs_.size() + o.coeffs_.size() - 1, S(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == S(0)) continue;
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == S(0)) coeffs_.pop_back();
  }

  std::vector<S> coeffs_;
};

template <class S>
Polynomial<S> div_by_int(const Polynomial<S>& p, long k) {
  std::vector<S> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.push_back(div_by_int(c, k));
  return Polynomial<S>(std::move(out));
}

template <class S>
bool is_finite(const Polynomial<S>& p) {
  for (const auto& c : p.coefficients())
    if (!is_finite(c)) return false;
  return true;
}

/// Quotient and remainder of a / b over a field.
template <Field F>
std::pair<Polynomial<F>, Polynomial<F>> divmod(const Polynomial<F>& a, const Polynomial<F>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<F> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial<F>(), a};
  std::vector<F> quot(static_cast<std::size_t>(a.degree() - db + 1), F(0));
  const F lead = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    const F q = rem[static_cast<std::size_t>(k + db)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coeff(static_cast<std::size_t>(j));
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial<F>(std::move(quot)), Polynomial<F>(std::move(rem))};
}

template <Field F>
bool divides(const Polynomial<F>& d, const Polynomial<F>& p) {
  return divmod(p, d).second.is_zero();
}

/// Polynomial with matrix coefficients, sum_k C_k t^k. Every coefficient
/// shares the same n x n shape.
template <class S>
struct MatrixPolynomial {
  std::size_t n = 0;
  std::vector<Matrix<S>> coefficients;  // ascending degree

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }

  Matrix<S> operator()(const S& t) const {
    Matrix<S> acc(n, n);
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  /// Entry (i, j) as a scalar polynomial in t.
  Polynomial<S> entry(std::size_t i, std::size_t j) const {
    std::vector<S> c;
    c.reserve(coefficients.size());
    for (const auto& m : coefficients) c.push_back(m(i, j));
    return Polynomial<S>(std::move(c));
  }
};

/// The same polynomial viewed as a matrix whose entries are polynomials.
template <class S>
Matrix<Polynomial<S>> to_polynomial_matrix(const MatrixPolynomial<S>& mp) {
  Matrix<Polynomial<S>> out(mp.n, mp.n);
  for (std::size_t i = 0; i < mp.n; ++i)
    for (std::size_t j = 0; j < mp.n; ++j) out(i, j) = mp.entry(i, j);
  return out;
}

}  // namespace symrank

#endif  // SYMRANK_POLYNOMIAL_HPP
