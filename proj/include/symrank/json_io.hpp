#ifndef SYMRANK_JSON_IO_HPP
#define SYMRANK_JSON_IO_HPP

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "symrank/canonical.hpp"
#include "symrank/jacobian.hpp"
#include "symrank/linalg.hpp"
#include "symrank/matpoly.hpp"
#include "symrank/proofs.hpp"

namespace symrank {

using json = nlohmann::json;

/// Malformed or schema-violating input. The message starts with the
/// location (byte offset or JSON path) of the problem.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses JSON text; syntax errors become InputError naming source and byte offset.
json parse_json_text(std::string_view text, std::string_view source);

// Scalars: exact -> ["p/q", "r/s"]; float -> [re, im].
json to_json_value(const GaussianRational& x);
json to_json_value(const ComplexFloat& x);
/// Also accepts an integer, a literal string such as "1-2i", or a pair of integers.
GaussianRational exact_scalar_from_json(const json& j, const std::string& path);
ComplexFloat float_scalar_from_json(const json& j, const std::string& path);

template <class F>
json vector_to_json(const std::vector<F>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json_value(x));
  return out;
}

/// {"n", "field", "entries"} for square matrices; rectangular matrices
/// (Jacobians) use {"rows", "cols", "field", "entries"}.
template <class F>
json matrix_to_json(const Matrix<F>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (const auto& x : m.row(i)) row.push_back(to_json_value(x));
    rows.push_back(std::move(row));
  }
  json out;
  if (m.is_square()) {
    out["n"] = m.rows();
  } else {
    out["rows"] = m.rows();
    out["cols"] = m.cols();
  }
  out["field"] = std::string(field_traits<F>::name);
  out["entries"] = std::move(rows);
  return out;
}

using AnyMatrix = std::variant<ExactMatrix, FloatMatrix>;

AnyMatrix matrix_from_json(const json& j, const std::string& path = "$");
ExactMatrix exact_matrix_from_json(const json& j, const std::string& path = "$");

template <class F>
json polynomial_to_json(const Polynomial<F>& p) {
  return {{"field", std::string(field_traits<F>::name)},
          {"degree", p.degree()},
          {"coefficients", vector_to_json(p.coefficients())}};
}

template <class F>
json sym_point_to_json(const SymPoint<F>& s) {
  return {{"n", s.size()}, {"field", std::string(field_traits<F>::name)}, {"sigma", vector_to_json(s.sigma)}};
}

template <class F>
json jacobian_to_json(const JacobianMatrix<F>& jac) {
  json out = matrix_to_json(jac.entries);
  out["n"] = jac.n;
  out["column_order"] = "row-major";
  return out;
}

json numeric_rank_to_json(const NumericRank& r);

json to_json_value(const JordanSpec& spec);
JordanSpec jordan_spec_from_json(const json& j, const std::string& path = "$");

json to_json_value(const FrobeniusSpec& spec);
FrobeniusSpec frobenius_spec_from_json(const json& j, const std::string& path = "$");

json to_json_value(const CurveSpec& curve);
CurveSpec curve_from_json(const json& j, const std::string& path = "$");

json to_json_value(const TheoremReport& report);
json to_json_value(const NullspaceCertificate& cert);
json to_json_value(const TangentCertificate& cert);
json to_json_value(const VanishingOrder& v);
json to_json_value(const ConfluentVandermondeReport& r);

}  // namespace symrank

#endif  // SYMRANK_JSON_IO_HPP
