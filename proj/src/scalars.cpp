#include "symrank/scalars.hpp"

#include <algorithm>
#include <cctype>

namespace symrank {

namespace {

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::string digits(text);
  const std::size_t start = (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) ? 1 : 0;
  if (digits.size() == start ||
      !std::all_of(digits.begin() + static_cast<std::ptrdiff_t>(start), digits.end(),
                   [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  }
  if (digits[0] == '+') digits.erase(0, 1);
  return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational normalize(const mpz_class& num, const mpz_class& den) { return Rational(num, den); }

Rational Rational::from_double(double v) {
  if (!std::isfinite(v)) throw NumericError("cannot convert non-finite double to a rational");
  return Rational(mpq_class(v));
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text), mpz_class(1));
  return Rational(parse_integer(text.substr(0, slash), text), parse_integer(text.substr(slash + 1), text));
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("gaussian rational division by zero");
  const Rational d = o.norm();
  Rational re = (re_ * o.re_ + im_ * o.im_) / d;
  Rational im = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty scalar literal");
  if (s.back() != 'i') return GaussianRational(Rational::parse(s));

  s.pop_back();
  // Split "a+bi" at the last sign that is not the leading one.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  const std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
  std::string im_part = split == std::string::npos ? s : s.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  return {re_part.empty() ? Rational(0) : Rational::parse(re_part), Rational::parse(im_part)};
}

std::string GaussianRational::str() const {
  auto compact = [](const Rational& r) {
    return r.denominator() == 1 ? r.numerator().get_str() : r.str();
  };
  if (im_.is_zero()) return compact(re_);
  std::string im_text;
  if (im_ == Rational(1)) {
    im_text = "i";
  } else if (im_ == Rational(-1)) {
    im_text = "-i";
  } else {
    im_text = compact(im_) + "i";
  }
  if (re_.is_zero()) return im_text;
  if (im_text[0] != '-') im_text = "+" + im_text;
  return compact(re_) + im_text;
}

bool approx_eq(const ComplexFloat& a, const ComplexFloat& b, double tol) {
  if (!(tol >= 0.0)) throw std::invalid_argument("approx_eq tolerance must be non-negative");
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol * scale;
}

GaussianRational to_exact(const ComplexFloat& x) {
  return {Rational::from_double(x.real()), Rational::from_double(x.imag())};
}

}  // namespace symrank
