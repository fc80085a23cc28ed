// symrank: command-line front end for the symmetrization-map rank toolkit.
//
// Every subcommand reads one JSON document (file argument, "-" for stdin,
// or --json TEXT) and writes JSON to stdout or --out. Exit codes: 0 when
// all checks pass, 1 when a check fails, 2 on malformed input.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "symrank/canonical.hpp"
#include "symrank/jacobian.hpp"
#include "symrank/json_io.hpp"
#include "symrank/linalg.hpp"
#include "symrank/matpoly.hpp"
#include "symrank/proofs.hpp"
#include "symrank/sweep.hpp"

namespace {

using namespace symrank;

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Options {
  std::string input;
  std::string json_text;
  std::string field;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;

  std::uint64_t seed_value() const { return seed.value_or(0); }
  std::string out;
  double fd_step = 0.0;
  int trials = 5;
  // sweep
  std::optional<int> n_max;
  std::string pool;
  std::string modes;
  std::optional<int> parallelism;
};

json read_input(const Options& opt, bool required = true) {
  if (!opt.json_text.empty()) return parse_json_text(opt.json_text, "--json");
  std::string text;
  std::string source = opt.input.empty() ? "-" : opt.input;
  if (source == "-") {
    if (!required && opt.input.empty()) return json::object();
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    source = "<stdin>";
  } else {
    std::ifstream in(source);
    if (!in) throw InputError(source + ": cannot open file");
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return parse_json_text(text, source);
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(opt.out);
  if (!out) throw std::runtime_error(opt.out + ": cannot open for writing");
  out << text << '\n';
}

/// --field, then $SYMRANK_FIELD, then the matrix's own field.
std::string requested_field(const Options& opt) {
  if (!opt.field.empty()) return opt.field;
  if (const char* env = std::getenv("SYMRANK_FIELD")) return env;
  return "";
}

FloatMatrix as_float(const AnyMatrix& m) {
  if (const auto* f = std::get_if<FloatMatrix>(&m)) return *f;
  return map_entries<ComplexFloat>(std::get<ExactMatrix>(m), [](const auto& x) { return to_float(x); });
}

ExactMatrix as_exact(const AnyMatrix& m) {
  if (const auto* e = std::get_if<ExactMatrix>(&m)) return *e;
  return map_entries<GaussianRational>(std::get<FloatMatrix>(m), [](const auto& x) { return to_exact(x); });
}

/// Loads a matrix and converts it to the requested field.
AnyMatrix load_matrix(const Options& opt) {
  AnyMatrix m = matrix_from_json(read_input(opt));
  const std::string field = requested_field(opt);
  if (field.empty()) return m;
  if (field == "exact") return as_exact(m);
  if (field == "float") return as_float(m);
  throw InputError("--field: expected exact or float, got \"" + field + "\"");
}

bool is_frobenius_input(const json& j) { return j.is_object() && j.contains("invariant_factors"); }

int cmd_gen(const Options& opt) {
  const json in = read_input(opt);
  ExactMatrix b = is_frobenius_input(in) ? build_frobenius(frobenius_spec_from_json(in))
                                         : build_jordan(jordan_spec_from_json(in));
  if (requested_field(opt) == "float") {
    emit(opt, matrix_to_json(as_float(b)).dump());
  } else {
    emit(opt, matrix_to_json(b).dump());
  }
  return 0;
}

int cmd_pi(const Options& opt) {
  const AnyMatrix m = load_matrix(opt);
  std::visit([&](const auto& mat) { emit(opt, sym_point_to_json(symmetrize(mat)).dump()); }, m);
  return 0;
}

int cmd_jacobian(const Options& opt) {
  const AnyMatrix m = load_matrix(opt);
  if (opt.fd_step > 0.0) {
    emit(opt, jacobian_to_json(jacobian_fd(as_float(m), opt.fd_step)).dump());
    return 0;
  }
  std::visit([&](const auto& mat) { emit(opt, jacobian_to_json(jacobian_exact(mat)).dump()); }, m);
  return 0;
}

int cmd_rank(const Options& opt) {
  const AnyMatrix m = load_matrix(opt);
  json out;
  std::size_t rank = 0;
  std::size_t degree = 0;
  if (const auto* e = std::get_if<ExactMatrix>(&m)) {
    rank = rank_exact(jacobian_exact(*e).entries);
    degree = static_cast<std::size_t>(min_poly_krylov(*e).degree());
    out = {{"field", "exact"}, {"rank", rank}};
  } else {
    const auto& f = std::get<FloatMatrix>(m);
    const NumericRank r = rank_numeric(jacobian_exact(f).entries, opt.tol);
    rank = r.rank;
    degree = min_poly_degree_numeric(f, opt.tol);
    out = numeric_rank_to_json(r);
    out["field"] = "float";
  }
  out["min_poly_degree"] = degree;
  out["theorem_holds"] = rank == degree;
  emit(opt, out.dump());
  return rank == degree ? 0 : kExitFail;
}

int cmd_minpoly(const Options& opt) {
  const AnyMatrix m = load_matrix(opt);
  if (const auto* e = std::get_if<ExactMatrix>(&m)) {
    const auto p = min_poly_krylov(*e);
    json out = polynomial_to_json(p);
    out["divides_char_poly"] = divides(p, char_poly(*e));
    emit(opt, out.dump());
    return 0;
  }
  emit(opt, json{{"field", "float"}, {"degree", min_poly_degree_numeric(std::get<FloatMatrix>(m), opt.tol)}}.dump());
  return 0;
}

int cmd_verify(const Options& opt) {
  const TheoremReport report = verify_theorem(jordan_spec_from_json(read_input(opt)), opt.seed_value());
  emit(opt, to_json_value(report).dump());
  return report.theorem_holds ? 0 : kExitFail;
}

int cmd_nullspace(const Options& opt) {
  const JordanSpec spec = jordan_spec_from_json(read_input(opt));
  const auto cert = nullspace_basis(spec);
  const bool annihilates = verify_annihilation(cert, build_jordan(spec));
  const std::size_t rank = certificate_rank(cert);
  const auto expected = static_cast<std::size_t>(spec.n - min_poly_degree(spec));
  const bool passes = annihilates && rank == expected && cert.vectors.size() == expected;
  json out = to_json_value(cert);
  out["annihilates"] = annihilates;
  out["rank"] = rank;
  out["passes"] = passes;
  emit(opt, out.dump());
  return passes ? 0 : kExitFail;
}

int cmd_tangent(const Options& opt) {
  const json in = read_input(opt);
  const FrobeniusSpec fspec =
      is_frobenius_input(in) ? frobenius_spec_from_json(in) : jordan_to_frobenius(jordan_spec_from_json(in));
  const auto cert = tangent_construction(fspec);
  const auto linearity = sigma_linearity_check(fspec, opt.trials, opt.seed_value());
  json out = to_json_value(cert);
  out["frobenius"] = to_json_value(fspec);
  out["sigma_linearity"] = linearity.passes();
  emit(opt, out.dump());
  return cert.passes && linearity.passes() ? 0 : kExitFail;
}

int cmd_vandermonde(const Options& opt) {
  const json in = read_input(opt);
  std::vector<VandermondeCluster> clusters;
  if (in.is_object() && in.contains("clusters")) {
    const auto& list = in["clusters"];
    if (!list.is_array()) throw InputError("$.clusters: expected an array");
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string path = "$.clusters[" + std::to_string(k) + "]";
      if (!list[k].is_object() || !list[k].contains("lambda") || !list[k].contains("multiplicity") ||
          !list[k]["multiplicity"].is_number_integer()) {
        throw InputError(path + ": expected {\"lambda\": scalar, \"multiplicity\": int}");
      }
      clusters.push_back({exact_scalar_from_json(list[k]["lambda"], path + ".lambda"), list[k]["multiplicity"].get<int>()});
    }
  } else {
    for (const auto& g : jordan_spec_from_json(in).blocks) clusters.push_back({g.eigenvalue, g.multiplicity()});
  }
  const auto report = confluent_vandermonde_det(clusters);
  emit(opt, to_json_value(report).dump());
  return report.abs_equal && report.sign != 0 ? 0 : kExitFail;
}

int cmd_ord(const Options& opt) {
  const json in = read_input(opt);
  JordanSpec spec;
  CurveSpec curve;
  if (in.is_object() && in.contains("spec")) {
    spec = jordan_spec_from_json(in["spec"], "$.spec");
    curve = in.contains("curve") ? curve_from_json(in["curve"], "$.curve")
                                 : random_linear_curve(build_jordan(spec), opt.seed_value());
  } else {
    spec = jordan_spec_from_json(in);
    curve = random_linear_curve(build_jordan(spec), opt.seed_value());
  }
  const auto profile = vanishing_profile(spec, curve);
  json checks = json::array();
  bool passes = true;
  for (const auto& v : profile) {
    checks.push_back(to_json_value(v));
    passes = passes && v.passes;
  }
  emit(opt, json{{"spec", to_json_value(spec)}, {"curve", to_json_value(curve)}, {"checks", checks}, {"pass", passes}}
                .dump());
  return passes ? 0 : kExitFail;
}

int cmd_sweep(const Options& opt) {
  SweepConfig config;
  const json in = read_input(opt, /*required=*/false);
  if (!in.empty()) config = sweep_config_from_json(in);
  if (opt.n_max) config.n_max = *opt.n_max;
  if (opt.parallelism) config.parallelism = *opt.parallelism;
  if (!opt.modes.empty()) config.modes = SweepModes::parse(opt.modes);
  if (!opt.pool.empty()) {
    config.eigenvalue_pool.clear();
    std::stringstream ss(opt.pool);
    std::string item;
    while (std::getline(ss, item, ',')) config.eigenvalue_pool.push_back(GaussianRational::parse(item));
  }
  if (opt.seed) config.seed = *opt.seed;
  config.validate();

  const SweepReport report = run_sweep(config);
  std::ostringstream os;
  write_jsonl(os, report, config);
  std::string text = os.str();
  text.pop_back();  // emit() appends the final newline
  emit(opt, text);
  std::cerr << "sweep: " << report.passed << "/" << report.total << " specs passed\n";
  return report.passes() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank of the derivative of the symmetrization map versus minimal-polynomial degree"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", opt.input, "Input JSON file, or - for stdin");
    sub->add_option("--json", opt.json_text, "Inline JSON input");
    sub->add_option("--field", opt.field, "Scalar field: exact or float (default: $SYMRANK_FIELD or the input's)")
        ->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--tol", opt.tol, "Singular-value threshold for float rank decisions");
    sub->add_option("--seed", opt.seed, "Seed for random conjugations and curves");
    sub->add_option("--out", opt.out, "Write output to this file instead of stdout");
  };

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Options&);
  };
  const Command commands[] = {
      {"gen", "Jordan or Frobenius spec -> matrix", cmd_gen},
      {"pi", "Matrix -> (sigma_1, ..., sigma_n)", cmd_pi},
      {"jacobian", "Matrix -> Jacobian of the symmetrization map", cmd_jacobian},
      {"rank", "Matrix -> rank of the Jacobian and minimal-polynomial degree", cmd_rank},
      {"minpoly", "Matrix -> minimal polynomial and degree", cmd_minpoly},
      {"verify", "Jordan spec -> theorem report", cmd_verify},
      {"nullspace", "Jordan spec -> null-space certificate", cmd_nullspace},
      {"tangent", "Jordan or Frobenius spec -> tangent certificate", cmd_tangent},
      {"vandermonde", "Jordan spec or clusters -> confluent Vandermonde check", cmd_vandermonde},
      {"ord", "Jordan spec (+ curve) -> vanishing-order report", cmd_ord},
      {"sweep", "Sweep config -> JSONL report over all Jordan structures", cmd_sweep},
  };

  int (*selected)(const Options&) = nullptr;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common(sub);
    if (std::string(c.name) == "jacobian") {
      sub->add_option("--fd", opt.fd_step, "Use central differences with this step (float)");
    }
    if (std::string(c.name) == "tangent") sub->add_option("--trials", opt.trials, "Random linearity trials");
    if (std::string(c.name) == "sweep") {
      sub->add_option("--n-max", opt.n_max, "Largest matrix size");
      sub->add_option("--pool", opt.pool, "Comma-separated eigenvalues, e.g. 0,1,-1,i,2");
      sub->add_option("--modes", opt.modes, "Comma-separated: theorem,nullspace,tangent,vandermonde,ord");
      sub->add_option("--parallelism", opt.parallelism, "Worker threads");
    }
    sub->callback([&selected, run = c.run] { selected = run; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    return selected(opt);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
}
