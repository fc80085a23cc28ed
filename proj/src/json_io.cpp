#include "symrank/json_io.hpp"

#include <cmath>

namespace symrank {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw InputError(path + ": " + what); }

const json& member(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing key \"") + key + "\"");
  return *it;
}

long integer_from_json(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

Rational rational_from_json(const json& j, const std::string& path) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
  fail(path, "expected a rational string \"p/q\"");
}

template <class F>
std::vector<F> scalar_list(const json& j, const std::string& path, F (*parse)(const json&, const std::string&)) {
  if (!j.is_array()) fail(path, "expected an array");
  std::vector<F> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(parse(j[k], path + "[" + std::to_string(k) + "]"));
  return out;
}

template <class F>
Matrix<F> entries_from_json(const json& j, std::size_t n, const std::string& path,
                            F (*parse)(const json&, const std::string&)) {
  if (!j.is_array() || j.size() != n) fail(path, "expected " + std::to_string(n) + " rows");
  Matrix<F> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row_path = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != n) fail(row_path, "expected " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) m(i, c) = parse(j[i][c], row_path + "[" + std::to_string(c) + "]");
  }
  return m;
}

}  // namespace

json parse_json_text(std::string_view text, std::string_view source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string(source) + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

json to_json_value(const GaussianRational& x) { return json::array({x.re().str(), x.im().str()}); }

json to_json_value(const ComplexFloat& x) { return json::array({x.real(), x.imag()}); }

GaussianRational exact_scalar_from_json(const json& j, const std::string& path) {
  if (j.is_array()) {
    if (j.size() != 2) fail(path, "exact scalar must be [re, im]");
    return {rational_from_json(j[0], path + "[0]"), rational_from_json(j[1], path + "[1]")};
  }
  if (j.is_number_integer()) return GaussianRational(j.get<long>());
  if (j.is_string()) {
    try {
      return GaussianRational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(path, e.what());
    }
  }
  fail(path, "expected an exact scalar [\"p/q\", \"r/s\"]");
}

ComplexFloat float_scalar_from_json(const json& j, const std::string& path) {
  ComplexFloat out;
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    out = {j[0].get<double>(), j[1].get<double>()};
  } else if (j.is_number()) {
    out = {j.get<double>(), 0.0};
  } else {
    fail(path, "expected a float scalar [re, im]");
  }
  if (!is_finite(out)) fail(path, "non-finite float scalar");
  return out;
}

AnyMatrix matrix_from_json(const json& j, const std::string& path) {
  const long n = integer_from_json(member(j, "n", path), path + ".n");
  if (n < 1) fail(path + ".n", "matrix size must be at least 1");
  std::string field = "exact";
  if (j.contains("field")) {
    if (!j["field"].is_string()) fail(path + ".field", "expected \"exact\" or \"float\"");
    field = j["field"].get<std::string>();
  }
  const auto& entries = member(j, "entries", path);
  const auto size = static_cast<std::size_t>(n);
  if (field == "exact") return entries_from_json<GaussianRational>(entries, size, path + ".entries", exact_scalar_from_json);
  if (field == "float") return entries_from_json<ComplexFloat>(entries, size, path + ".entries", float_scalar_from_json);
  fail(path + ".field", "unknown field \"" + field + "\"");
}

ExactMatrix exact_matrix_from_json(const json& j, const std::string& path) {
  AnyMatrix m = matrix_from_json(j, path);
  if (auto* exact = std::get_if<ExactMatrix>(&m)) return std::move(*exact);
  fail(path, "expected an exact matrix");
}

json numeric_rank_to_json(const NumericRank& r) {
  return {{"rank", r.rank},
          {"threshold", r.threshold},
          {"gap", r.gap},
          {"singular_values", r.singular_values}};
}

json to_json_value(const JordanSpec& spec) {
  json blocks = json::array();
  for (const auto& g : spec.blocks) blocks.push_back({{"eigenvalue", to_json_value(g.eigenvalue)}, {"sizes", g.sizes}});
  return {{"n", spec.n}, {"blocks", std::move(blocks)}};
}

JordanSpec jordan_spec_from_json(const json& j, const std::string& path) {
  JordanSpec spec;
  spec.n = static_cast<int>(integer_from_json(member(j, "n", path), path + ".n"));
  const auto& blocks = member(j, "blocks", path);
  if (!blocks.is_array()) fail(path + ".blocks", "expected an array");
  for (std::size_t g = 0; g < blocks.size(); ++g) {
    const std::string gp = path + ".blocks[" + std::to_string(g) + "]";
    JordanBlockGroup group;
    group.eigenvalue = exact_scalar_from_json(member(blocks[g], "eigenvalue", gp), gp + ".eigenvalue");
    const auto& sizes = member(blocks[g], "sizes", gp);
    if (!sizes.is_array()) fail(gp + ".sizes", "expected an array");
    for (std::size_t b = 0; b < sizes.size(); ++b) {
      group.sizes.push_back(static_cast<int>(integer_from_json(sizes[b], gp + ".sizes[" + std::to_string(b) + "]")));
    }
    spec.blocks.push_back(std::move(group));
  }
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
  return spec;
}

json to_json_value(const FrobeniusSpec& spec) {
  json factors = json::array();
  for (const auto& p : spec.invariant_factors) factors.push_back(vector_to_json(p.coefficients()));
  return {{"invariant_factors", std::move(factors)}};
}

FrobeniusSpec frobenius_spec_from_json(const json& j, const std::string& path) {
  const auto& factors = member(j, "invariant_factors", path);
  if (!factors.is_array()) fail(path + ".invariant_factors", "expected an array");
  FrobeniusSpec spec;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    spec.invariant_factors.emplace_back(
        scalar_list<GaussianRational>(factors[k], path + ".invariant_factors[" + std::to_string(k) + "]",
                                      exact_scalar_from_json));
  }
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
  return spec;
}

json to_json_value(const CurveSpec& curve) {
  json coeffs = json::array();
  for (const auto& m : curve.coefficients) coeffs.push_back(matrix_to_json(m));
  return {{"coefficients", std::move(coeffs)}};
}

CurveSpec curve_from_json(const json& j, const std::string& path) {
  const auto& coeffs = member(j, "coefficients", path);
  if (!coeffs.is_array() || coeffs.empty()) fail(path + ".coefficients", "expected a non-empty array of matrices");
  CurveSpec curve;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    curve.coefficients.push_back(exact_matrix_from_json(coeffs[k], path + ".coefficients[" + std::to_string(k) + "]"));
    if (curve.coefficients.back().rows() != curve.coefficients.front().rows()) {
      fail(path + ".coefficients[" + std::to_string(k) + "]", "size differs from Phi(0)");
    }
  }
  return curve;
}

json to_json_value(const TheoremReport& report) {
  return {{"spec", to_json_value(report.spec)},
          {"n", report.n},
          {"min_poly_degree", report.min_poly_degree},
          {"rank", report.rank},
          {"conjugated_rank", report.conjugated_rank},
          {"theorem_holds", report.theorem_holds},
          {"field", report.field},
          {"conjugation_checked", report.conjugation_checked},
          {"in_spectral_ball", report.in_spectral_ball}};
}

json to_json_value(const NullspaceCertificate& cert) {
  json vectors = json::array();
  for (const auto& v : cert.vectors) {
    vectors.push_back({{"lambda", to_json_value(v.lambda)}, {"k", v.k}, {"v", vector_to_json(v.v)}});
  }
  return {{"n", cert.n}, {"vectors", std::move(vectors)}};
}

json to_json_value(const TangentCertificate& cert) {
  json directions = json::array();
  for (auto i : cert.h_index) directions.push_back("h_" + std::to_string(i));
  json images = json::array();
  for (const auto& img : cert.images) images.push_back(vector_to_json(img));
  return {{"directions", std::move(directions)},
          {"images", std::move(images)},
          {"pivots", cert.pivots},
          {"rank", cert.rank},
          {"echelon", cert.echelon},
          {"passes", cert.passes}};
}

json to_json_value(const VanishingOrder& v) {
  return {{"lambda", to_json_value(v.lambda)},
          {"k", v.k},
          {"observed_order", v.observed ? json(*v.observed) : json("inf")},
          {"required_order", v.required},
          {"pass", v.passes}};
}

json to_json_value(const ConfluentVandermondeReport& r) {
  return {{"direct", to_json_value(r.direct)},
          {"closed_form", to_json_value(r.closed_form)},
          {"direct_abs_squared", r.direct_abs_squared.str()},
          {"closed_form_abs_squared", r.closed_form_abs_squared.str()},
          {"sign", r.sign},
          {"abs_equal", r.abs_equal}};
}

}  // namespace symrank
