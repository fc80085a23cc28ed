#ifndef SYMRANK_SWEEP_HPP
#define SYMRANK_SWEEP_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "symrank/canonical.hpp"
#include "symrank/jacobian.hpp"
#include "symrank/json_io.hpp"

namespace symrank {

/// Partitions of m into positive parts, each listed in ascending order.
std::vector<std::vector<int>> integer_partitions(int m);

/// Visits every Jordan structure of size n with eigenvalues drawn from the
/// pool: a multiplicity for each pool entry (zero allowed) summing to n,
/// then a partition of every positive multiplicity. Groups follow pool
/// order; the visiting order is deterministic.
void for_each_jordan_spec(int n, const std::vector<GaussianRational>& pool,
                          const std::function<void(const JordanSpec&)>& visit);

std::vector<JordanSpec> enumerate_jordan_specs(int n, const std::vector<GaussianRational>& pool);

/// {0, 1, -1, i, 2}.
std::vector<GaussianRational> default_eigenvalue_pool();

struct SweepModes {
  bool theorem = false;
  bool nullspace = false;
  bool tangent = false;
  bool vandermonde = false;
  bool ord = false;

  bool any() const { return theorem || nullspace || tangent || vandermonde || ord; }
  static SweepModes all() { return {true, true, true, true, true}; }
  /// Parses a comma-separated list of theorem,nullspace,tangent,vandermonde,ord (or "all").
  static SweepModes parse(const std::string& list);
  std::vector<std::string> names() const;
};

struct SweepConfig {
  int n_max = 4;
  std::vector<GaussianRational> eigenvalue_pool = default_eigenvalue_pool();
  SweepModes modes = SweepModes::all();
  std::uint64_t seed = 0;
  int parallelism = 1;

  void validate() const;
};

SweepConfig sweep_config_from_json(const json& j, const std::string& path = "$");
json to_json_value(const SweepConfig& config);

/// Outcome of every enabled mode on one spec.
struct SpecOutcome {
  std::size_t index = 0;
  JordanSpec spec;
  std::uint64_t seed = 0;
  int min_poly_degree = 0;
  std::optional<TheoremReport> theorem;
  std::optional<std::size_t> nullspace_count;
  std::optional<std::size_t> nullspace_rank;
  std::optional<bool> nullspace_annihilates;
  std::optional<TangentCertificate> tangent;
  std::optional<ConfluentVandermondeReport> vandermonde;
  std::optional<std::size_t> ord_checks;
  std::optional<std::size_t> ord_violations;
  std::vector<std::string> failures;

  bool passes() const { return failures.empty(); }
  /// Single CLI invocations that reproduce each enabled check.
  std::vector<std::string> reproduce_commands() const;
};

SpecOutcome evaluate_spec(const JordanSpec& spec, std::size_t index, std::uint64_t seed, const SweepModes& modes);

struct SweepReport {
  std::vector<SpecOutcome> outcomes;  // canonical enumeration order
  std::size_t total = 0;
  std::size_t passed = 0;
  std::vector<std::size_t> failures;  // indices into outcomes
  bool passes() const { return failures.empty(); }
};

/// Per-spec seed, independent of scheduling.
std::uint64_t spec_seed(std::uint64_t seed, std::size_t index);

SweepReport run_sweep(const SweepConfig& config);

json to_json_value(const SpecOutcome& outcome);
json summary_json(const SweepReport& report, const SweepConfig& config);

/// One JSON object per spec, then a summary line.
void write_jsonl(std::ostream& os, const SweepReport& report, const SweepConfig& config);

}  // namespace symrank

#endif  // SYMRANK_SWEEP_HPP
