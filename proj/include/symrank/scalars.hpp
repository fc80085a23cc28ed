#ifndef SYMRANK_SCALARS_HPP
#define SYMRANK_SCALARS_HPP

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <complex>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace symrank {

/// Raised when a floating-point computation leaves the finite range.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact rational number with an arbitrary-precision numerator and a
/// positive denominator, always kept in lowest terms.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

  /// Builds num/den in canonical form. Throws std::invalid_argument if den == 0.
  Rational(const mpz_class& num, const mpz_class& den);

  /// Exact value of a finite double (every double is a dyadic rational).
  static Rational from_double(double v);

  /// Parses "p" or "p/q" with optional leading sign on p and q.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }

  /// Canonical text "p/q"; the denominator is always written, zero is "0/1".
  std::string str() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

/// num/den reduced to lowest terms with a positive denominator.
Rational normalize(const mpz_class& num, const mpz_class& den);

/// Element of Q(i): re + im*i with exact rational parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  template <std::integral I>
  GaussianRational(I v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  /// Parses literals such as "3", "-1/2", "i", "-2i", "1/3+4/5i", "1-i".
  static GaussianRational parse(std::string_view text);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  GaussianRational conj() const { return {re_, -im_}; }
  /// Squared modulus re^2 + im^2.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  /// Human-readable literal accepted by parse().
  std::string str() const;

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

 private:
  Rational re_;
  Rational im_;
};

using ComplexFloat = std::complex<double>;

/// |a - b| <= tol * max(1, |a|, |b|). Throws std::invalid_argument for tol < 0.
bool approx_eq(const ComplexFloat& a, const ComplexFloat& b, double tol);

inline ComplexFloat to_float(const GaussianRational& x) {
  return {x.re().to_double(), x.im().to_double()};
}
inline ComplexFloat to_float(const ComplexFloat& x) { return x; }

/// Exact binary value of a finite complex double.
GaussianRational to_exact(const ComplexFloat& x);
inline GaussianRational to_exact(const GaussianRational& x) { return x; }

inline bool is_finite(const GaussianRational&) { return true; }
inline bool is_finite(const ComplexFloat& x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); }

/// Division of a ring element by a positive integer; the only division
/// the characteristic-polynomial recursion needs.
inline GaussianRational div_by_int(const GaussianRational& x, long k) {
  return {x.re() / Rational(k), x.im() / Rational(k)};
}
inline ComplexFloat div_by_int(const ComplexFloat& x, long k) { return x / static_cast<double>(k); }

template <class F>
struct field_traits;

template <>
struct field_traits<GaussianRational> {
  static constexpr bool exact = true;
  static constexpr std::string_view name = "exact";
};

template <>
struct field_traits<ComplexFloat> {
  static constexpr bool exact = false;
  static constexpr std::string_view name = "float";
};

template <class F>
concept Field = requires { field_traits<F>::exact; };

template <class F>
concept ExactField = Field<F> && field_traits<F>::exact;

/// Magnitude used for pivoting and error reporting.
inline double magnitude(const ComplexFloat& x) { return std::abs(x); }
inline double magnitude(const GaussianRational& x) { return std::abs(to_float(x)); }

}  // namespace symrank

#endif  // SYMRANK_SCALARS_HPP
