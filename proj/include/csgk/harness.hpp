#ifndef CSGK_HARNESS_HPP
#define CSGK_HARNESS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csgk/topology.hpp"

namespace csgk {

enum class SuiteId {
  eq21_oracle,
  assoc_c,
  formulas_31,
  hom,
  assoc_star,
  pi_hom,
  solve_claims,
  green,
  injectivity,
  idempotent_free,
  stability,
  telescope,
  tau_p,
  ext_topology,
  zero_topology,
  fix_sets,
  retract_behavior,
  confluence,
};

std::string_view to_string(SuiteId id);
std::optional<SuiteId> parse_suite(std::string_view name);
const std::vector<SuiteId>& all_suites();

enum class OutputFormat { json, text };

// Run-wide knobs. The general caps drive the region-parameterized suites;
// suites whose scale is pinned by contract (idempotent-free, stability,
// the topology grids, ...) carry their own constants and ignore them.
struct RunConfig {
  Region region{4, 4, 4};
  Exp bicyclic_cap = 4;
  std::vector<Exp> primes{2, 3, 5};
  Exp alpha_max = 3;
  Exp lambda_factor = 4;  // lambda_max = lambda_factor * p^alpha
  std::size_t witness_maxlen = 6;
  OutputFormat format = OutputFormat::json;
  unsigned workers = 1;
};

void validate(const RunConfig& cfg);  // throws invalid_argument

// Fields may be absent; present ones override the defaults. Unknown keys
// are rejected so a typoed config fails instead of silently doing nothing.
RunConfig config_from_json(const nlohmann::json& j, RunConfig base = {});
RunConfig load_config_file(const std::string& path, RunConfig base = {});

Report run_suite(SuiteId id, const RunConfig& cfg);

struct RunSummary {
  nlohmann::json config = nlohmann::json::object();
  std::vector<Report> suites;

  bool ok() const;
  std::uint64_t total_items() const;
  // All suite-level discrepancy annotations, in suite order.
  std::vector<nlohmann::json> paper_discrepancies() const;
  nlohmann::json to_json() const;
};

RunSummary run_all(const RunConfig& cfg);

struct Provenance {
  std::string tag;   // "paper" | "trivial" | "derived" (empty if absent)
  std::string cite;  // short claim description
};

struct VectorRecord {
  std::size_t line = 0;
  std::string op;
  nlohmann::json args;
  nlohmann::json expect;
  Provenance provenance;
};

// The ops a vector record may name, with their argument/expectation shapes,
// are dispatched by eval_vector_op; load_vectors rejects unknown ops.
bool is_known_vector_op(std::string_view op);

// One JSON object per line; blank lines allowed. Throws io_error if the
// file cannot be read and parse_error (with the line number) on a malformed
// line or unknown op.
std::vector<VectorRecord> load_vectors(const std::string& path);

// Evaluates the record's op and returns the canonical JSON encoding of the
// actual result, comparable byte-for-byte with record.expect.
nlohmann::json eval_vector_op(const VectorRecord& record);

// Replays every record; mismatches land in the report's failures with both
// values. An empty corpus passes vacuously.
Report replay_vectors(const std::vector<VectorRecord>& records);

}  // namespace csgk

#endif  // CSGK_HARNESS_HPP
