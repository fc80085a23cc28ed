#include "symrank/sweep.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "symrank/proofs.hpp"

namespace symrank {

namespace {

void partitions_rec(int remaining, int min_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = min_part; part <= remaining; ++part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

// Multiplicity vectors over the pool summing to n.
void compositions_rec(int remaining, std::size_t slot, std::vector<int>& current,
                      const std::function<void(const std::vector<int>&)>& visit) {
  if (slot + 1 == current.size()) {
    current[slot] = remaining;
    visit(current);
    return;
  }
  for (int take = remaining; take >= 0; --take) {
    current[slot] = take;
    compositions_rec(remaining - take, slot + 1, current, visit);
  }
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

}  // namespace

std::vector<std::vector<int>> integer_partitions(int m) {
  std::vector<std::vector<int>> out;
  if (m < 1) return out;
  std::vector<int> current;
  partitions_rec(m, 1, current, out);
  return out;
}

void for_each_jordan_spec(int n, const std::vector<GaussianRational>& pool,
                          const std::function<void(const JordanSpec&)>& visit) {
  if (n < 1 || pool.empty()) return;
  for (std::size_t a = 0; a < pool.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (pool[a] == pool[b]) throw std::invalid_argument("eigenvalue pool has repeated entry " + pool[a].str());
    }
  }
  std::vector<int> mult(pool.size(), 0);
  compositions_rec(n, 0, mult, [&](const std::vector<int>& multiplicities) {
    std::vector<std::size_t> used;
    std::vector<std::vector<std::vector<int>>> choices;
    for (std::size_t s = 0; s < pool.size(); ++s) {
      if (multiplicities[s] > 0) {
        used.push_back(s);
        choices.push_back(integer_partitions(multiplicities[s]));
      }
    }
    // Odometer over the partition choice of each used eigenvalue.
    std::vector<std::size_t> pick(used.size(), 0);
    while (true) {
      JordanSpec spec;
      spec.n = n;
      for (std::size_t u = 0; u < used.size(); ++u) spec.blocks.push_back({pool[used[u]], choices[u][pick[u]]});
      visit(spec);
      std::size_t u = used.size();
      while (u > 0) {
        --u;
        if (++pick[u] < choices[u].size()) break;
        pick[u] = 0;
        if (u == 0) return;
      }
      if (used.empty()) return;
    }
  });
}

std::vector<JordanSpec> enumerate_jordan_specs(int n, const std::vector<GaussianRational>& pool) {
  std::vector<JordanSpec> out;
  for_each_jordan_spec(n, pool, [&](const JordanSpec& s) { out.push_back(s); });
  return out;
}

std::vector<GaussianRational> default_eigenvalue_pool() {
  return {GaussianRational(0), GaussianRational(1), GaussianRational(-1), GaussianRational::i(), GaussianRational(2)};
}

SweepModes SweepModes::parse(const std::string& list) {
  SweepModes modes;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "all") {
      modes = all();
    } else if (item == "theorem") {
      modes.theorem = true;
    } else if (item == "nullspace") {
      modes.nullspace = true;
    } else if (item == "tangent") {
      modes.tangent = true;
    } else if (item == "vandermonde") {
      modes.vandermonde = true;
    } else if (item == "ord") {
      modes.ord = true;
    } else {
      throw std::invalid_argument("unknown sweep mode \"" + item + "\"");
    }
  }
  return modes;
}

std::vector<std::string> SweepModes::names() const {
  std::vector<std::string> out;
  if (theorem) out.emplace_back("theorem");
  if (nullspace) out.emplace_back("nullspace");
  if (tangent) out.emplace_back("tangent");
  if (vandermonde) out.emplace_back("vandermonde");
  if (ord) out.emplace_back("ord");
  return out;
}

void SweepConfig::validate() const {
  if (n_max < 1) throw std::invalid_argument("sweep: n_max must be at least 1");
  if (eigenvalue_pool.empty()) throw std::invalid_argument("sweep: eigenvalue pool is empty");
  for (std::size_t a = 0; a < eigenvalue_pool.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (eigenvalue_pool[a] == eigenvalue_pool[b]) {
        throw std::invalid_argument("sweep: eigenvalue pool has repeated entry " + eigenvalue_pool[a].str());
      }
    }
  }
  if (parallelism < 1) throw std::invalid_argument("sweep: parallelism must be at least 1");
}

SweepConfig sweep_config_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) throw InputError(path + ": expected an object");
  SweepConfig config;
  config.modes = SweepModes{};
  if (j.contains("n_max")) {
    if (!j["n_max"].is_number_integer()) throw InputError(path + ".n_max: expected an integer");
    config.n_max = j["n_max"].get<int>();
  }
  if (j.contains("eigenvalue_pool")) {
    const auto& pool = j["eigenvalue_pool"];
    if (!pool.is_array()) throw InputError(path + ".eigenvalue_pool: expected an array");
    config.eigenvalue_pool.clear();
    for (std::size_t k = 0; k < pool.size(); ++k) {
      config.eigenvalue_pool.push_back(
          exact_scalar_from_json(pool[k], path + ".eigenvalue_pool[" + std::to_string(k) + "]"));
    }
  }
  if (j.contains("modes")) {
    const auto& modes = j["modes"];
    if (!modes.is_array()) throw InputError(path + ".modes: expected an array of mode names");
    std::string joined;
    for (const auto& m : modes) {
      if (!m.is_string()) throw InputError(path + ".modes: expected mode names");
      joined += m.get<std::string>() + ",";
    }
    try {
      config.modes = SweepModes::parse(joined);
    } catch (const std::invalid_argument& e) {
      throw InputError(path + ".modes: " + e.what());
    }
  } else {
    config.modes = SweepModes::all();
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) throw InputError(path + ".seed: expected a non-negative integer");
    config.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("parallelism")) {
    if (!j["parallelism"].is_number_integer()) throw InputError(path + ".parallelism: expected an integer");
    config.parallelism = j["parallelism"].get<int>();
  }
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
  return config;
}

json to_json_value(const SweepConfig& config) {
  return {{"n_max", config.n_max},
          {"eigenvalue_pool", vector_to_json(config.eigenvalue_pool)},
          {"modes", config.modes.names()},
          {"seed", config.seed},
          {"parallelism", config.parallelism}};
}

std::uint64_t spec_seed(std::uint64_t seed, std::size_t index) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SpecOutcome evaluate_spec(const JordanSpec& spec, std::size_t index, std::uint64_t seed, const SweepModes& modes) {
  SpecOutcome out;
  out.index = index;
  out.spec = spec;
  out.seed = seed;
  out.min_poly_degree = min_poly_degree(spec);
  const auto n = static_cast<std::size_t>(spec.n);
  const auto m = static_cast<std::size_t>(out.min_poly_degree);

  if (modes.theorem) {
    out.theorem = verify_theorem(spec, seed);
    if (!out.theorem->theorem_holds) {
      out.failures.push_back("theorem: rank " + std::to_string(out.theorem->rank) + " (conjugated " +
                             std::to_string(out.theorem->conjugated_rank) + ") vs minimal polynomial degree " +
                             std::to_string(m));
    }
  }
  if (modes.nullspace) {
    const auto cert = nullspace_basis(spec);
    out.nullspace_count = cert.vectors.size();
    out.nullspace_rank = certificate_rank(cert);
    out.nullspace_annihilates = verify_annihilation(cert, build_jordan(spec));
    if (*out.nullspace_count != n - m) out.failures.push_back("nullspace: expected n - m vectors");
    if (*out.nullspace_rank != n - m) out.failures.push_back("nullspace: vectors are dependent");
    if (!*out.nullspace_annihilates) out.failures.push_back("nullspace: a vector does not annihilate the Jacobian");
  }
  if (modes.tangent) {
    out.tangent = tangent_construction(jordan_to_frobenius(spec));
    if (!out.tangent->passes) out.failures.push_back("tangent: images are not m independent echelon vectors");
    if (out.tangent->images.size() != m) out.failures.push_back("tangent: expected m images");
  }
  if (modes.nullspace && modes.tangent && *out.nullspace_count + out.tangent->images.size() != n) {
    out.failures.push_back("certificates: nullspace and tangent counts do not add up to n");
  }
  if (modes.vandermonde) {
    std::vector<VandermondeCluster> clusters;
    for (const auto& g : spec.blocks) clusters.push_back({g.eigenvalue, g.multiplicity()});
    out.vandermonde = confluent_vandermonde_det(clusters);
    if (!out.vandermonde->abs_equal || out.vandermonde->sign == 0) {
      out.failures.push_back("vandermonde: direct determinant differs from the closed form");
    }
  }
  if (modes.ord) {
    const auto profile = vanishing_profile(spec, random_linear_curve(build_jordan(spec), seed));
    out.ord_checks = profile.size();
    out.ord_violations = 0;
    for (const auto& v : profile) {
      if (!v.passes) {
        ++*out.ord_violations;
        out.failures.push_back("ord: lambda " + v.lambda.str() + ", k " + std::to_string(v.k) + " vanishes to order " +
                               std::to_string(*v.observed) + " < " + std::to_string(v.required));
      }
    }
  }
  return out;
}

std::vector<std::string> SpecOutcome::reproduce_commands() const {
  const std::string spec_text = to_json_value(spec).dump();
  const std::string common = " --seed " + std::to_string(seed) + " --json " + shell_quote(spec_text);
  std::vector<std::string> out;
  if (theorem) out.push_back("symrank verify" + common);
  if (nullspace_count) out.push_back("symrank nullspace" + common);
  if (tangent) out.push_back("symrank tangent" + common);
  if (vandermonde) out.push_back("symrank vandermonde" + common);
  if (ord_checks) out.push_back("symrank ord" + common);
  return out;
}

SweepReport run_sweep(const SweepConfig& config) {
  config.validate();
  SweepReport report;
  if (!config.modes.any()) return report;

  std::vector<JordanSpec> specs;
  for (int n = 1; n <= config.n_max; ++n) {
    for_each_jordan_spec(n, config.eigenvalue_pool, [&](const JordanSpec& s) { specs.push_back(s); });
  }
  report.outcomes.resize(specs.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      report.outcomes[i] = evaluate_spec(specs[i], i, spec_seed(config.seed, i), config.modes);
    }
  };
  const auto threads = static_cast<std::size_t>(config.parallelism);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  report.total = specs.size();
  for (std::size_t i = 0; i < report.outcomes.size(); ++i) {
    if (report.outcomes[i].passes()) {
      ++report.passed;
    } else {
      report.failures.push_back(i);
    }
  }
  return report;
}

json to_json_value(const SpecOutcome& o) {
  json j = {{"index", o.index},
            {"spec", to_json_value(o.spec)},
            {"seed", o.seed},
            {"min_poly_degree", o.min_poly_degree},
            {"pass", o.passes()}};
  if (o.theorem) j["theorem"] = to_json_value(*o.theorem);
  if (o.nullspace_count) {
    j["nullspace"] = {{"count", *o.nullspace_count},
                      {"rank", *o.nullspace_rank},
                      {"annihilates", *o.nullspace_annihilates}};
  }
  if (o.tangent) {
    j["tangent"] = {{"count", o.tangent->images.size()},
                    {"rank", o.tangent->rank},
                    {"pivots", o.tangent->pivots},
                    {"echelon", o.tangent->echelon}};
  }
  if (o.vandermonde) j["vandermonde"] = to_json_value(*o.vandermonde);
  if (o.ord_checks) j["ord"] = {{"checks", *o.ord_checks}, {"violations", *o.ord_violations}};
  if (!o.failures.empty()) {
    j["failures"] = o.failures;
    j["reproduce"] = o.reproduce_commands();
  }
  return j;
}

json summary_json(const SweepReport& report, const SweepConfig& config) {
  json failures = json::array();
  for (auto i : report.failures) {
    failures.push_back({{"index", i},
                        {"spec", to_json_value(report.outcomes[i].spec)},
                        {"seed", report.outcomes[i].seed},
                        {"reproduce", report.outcomes[i].reproduce_commands()}});
  }
  return {{"summary",
           {{"config", to_json_value(config)},
            {"total", report.total},
            {"passed", report.passed},
            {"failed", report.failures.size()},
            {"failures", std::move(failures)}}}};
}

void write_jsonl(std::ostream& os, const SweepReport& report, const SweepConfig& config) {
  for (const auto& o : report.outcomes) os << to_json_value(o).dump() << '\n';
  os << summary_json(report, config).dump() << '\n';
}

}  // namespace symrank
