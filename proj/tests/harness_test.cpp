#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "csgk/harness.hpp"

using namespace csgk;

namespace {

struct TempFile {
  std::string path;

  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path = "csgk_test_" + std::to_string(++counter) + ".jsonl";
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("suite ids parse both ways") {
  CHECK(parse_suite("eq21-oracle") == SuiteId::eq21_oracle);
  CHECK(parse_suite("tau-p") == SuiteId::tau_p);
  CHECK(!parse_suite("nope").has_value());
  CHECK(all_suites().size() == 18);
  for (SuiteId id : all_suites()) {
    CHECK(parse_suite(to_string(id)) == id);
  }
}

TEST_CASE("run config validation") {
  RunConfig cfg;
  CHECK_NOTHROW(validate(cfg));
  cfg.primes = {4};
  CHECK_THROWS_AS(validate(cfg), Error);
  cfg.primes = {2};
  cfg.workers = 0;
  CHECK_THROWS_AS(validate(cfg), Error);
}

TEST_CASE("config file overrides defaults and rejects unknown keys") {
  const RunConfig cfg = config_from_json(
      {{"region", "2,2,2"}, {"witness_maxlen", 4}, {"format", "text"}});
  CHECK(cfg.region == Region{2, 2, 2});
  CHECK(cfg.witness_maxlen == 4);
  CHECK(cfg.format == OutputFormat::text);
  CHECK(cfg.bicyclic_cap == 4);  // untouched default

  CHECK_THROWS_AS(config_from_json({{"regoin", "2,2,2"}}), Error);
  CHECK_THROWS_AS(config_from_json({{"format", "xml"}}), Error);
}

TEST_CASE("config files load from disk") {
  TempFile file(R"({"region":"3,3,3","primes":[2,7],"workers":2})");
  const RunConfig cfg = load_config_file(file.path);
  CHECK(cfg.region == Region{3, 3, 3});
  CHECK(cfg.primes == std::vector<Exp>{2, 7});
  CHECK(cfg.workers == 2);

  CHECK_THROWS_AS(load_config_file("missing.json"), Error);
  TempFile broken("{oops");
  CHECK_THROWS_AS(load_config_file(broken.path), Error);
  TempFile bad_prime(R"({"primes":[6]})");
  CHECK_THROWS_AS(load_config_file(bad_prime.path), Error);
}

TEST_CASE("load_vectors parses records with line numbers") {
  TempFile file(
      R"({"op":"mul_c","args":{"x":"1,2,3","y":"2,1,1"},"expect":"1,2,2"})"
      "\n\n"
      R"({"op":"is_idempotent","args":{"x":"0,1,0"},"expect":false,"provenance":{"tag":"derived","cite":"square grows"}})"
      "\n");
  const auto records = load_vectors(file.path);
  REQUIRE(records.size() == 2);
  CHECK(records[0].line == 1);
  CHECK(records[0].op == "mul_c");
  CHECK(records[0].provenance.tag.empty());
  CHECK(records[1].line == 3);
  CHECK(records[1].provenance.tag == "derived");
}

TEST_CASE("load_vectors error paths") {
  CHECK_THROWS_AS(load_vectors("does_not_exist.jsonl"), Error);

  TempFile bad_json("{not json\n");
  try {
    load_vectors(bad_json.path);
    FAIL("expected a parse failure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parse_error);
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }

  TempFile unknown_op(R"({"op":"frobnicate","args":{},"expect":1})" "\n");
  CHECK_THROWS_AS(load_vectors(unknown_op.path), Error);

  TempFile missing_expect(R"({"op":"mul_c","args":{"x":"1,0,0","y":"1,0,0"}})"
                          "\n");
  CHECK_THROWS_AS(load_vectors(missing_expect.path), Error);
}

TEST_CASE("empty corpus replays vacuously") {
  TempFile empty("");
  const auto records = load_vectors(empty.path);
  CHECK(records.empty());
  const Report report = replay_vectors(records);
  CHECK(report.ok());
  CHECK(report.vacuous());
}

TEST_CASE("a flipped expectation is reported with both values") {
  TempFile file(
      R"({"op":"mul_c","args":{"x":"1,2,3","y":"2,1,1"},"expect":"1,2,9"})"
      "\n");
  const Report report = replay_vectors(load_vectors(file.path));
  CHECK(!report.ok());
  CHECK(report.failure_count == 1);
  REQUIRE(report.failures.size() == 1);
  CHECK(report.failures[0]["expected"] == "1,2,9");
  CHECK(report.failures[0]["actual"] == "1,2,2");
  CHECK(report.failures[0]["line"] == 1);
}

TEST_CASE("expected-error records replay") {
  TempFile file(
      R"({"op":"parse_word","args":{"text":"abx"},"expect":{"error":"INVALID_CHARACTER"}})"
      "\n"
      R"({"op":"pow_c","args":{"x":"0,0,1","n":0},"expect":{"error":"ZERO_EXPONENT"}})"
      "\n");
  const Report report = replay_vectors(load_vectors(file.path));
  CHECK(report.ok());
}

TEST_CASE("the shipped corpus replays exactly") {
  const auto records = load_vectors(CSGK_VECTORS_FILE);
  CHECK(records.size() >= 90);
  const Report report = replay_vectors(records);
  if (!report.ok()) {
    for (const auto& f : report.failures) {
      MESSAGE(f.dump());
    }
  }
  CHECK(report.ok());
  // Every record carries a provenance tag from the allowed set.
  for (const auto& record : records) {
    CHECK(!record.provenance.tag.empty());
  }
}

TEST_CASE("run_suite: small suites behave as documented") {
  RunConfig cfg;
  const Report oracle = run_suite(SuiteId::eq21_oracle, cfg);
  CHECK(oracle.ok());
  CHECK(oracle.items_tested == 15376);  // 124^2 ordered pairs

  const Report telescope = run_suite(SuiteId::telescope, cfg);
  CHECK(telescope.ok());
  CHECK(telescope.items_tested == 20);

  const Report solve = run_suite(SuiteId::solve_claims, cfg);
  CHECK(solve.ok());
  REQUIRE(solve.paper_discrepancies.size() == 2);
  CHECK(solve.paper_discrepancies[0]["id"] == "xb-ax-solution-index");
  CHECK(solve.paper_discrepancies[1]["id"] == "nested-axb-solution-index");
}

TEST_CASE("worker partitioning changes nothing") {
  RunConfig serial;
  serial.region = Region{2, 2, 2};
  RunConfig parallel = serial;
  parallel.workers = 3;
  const auto lhs = run_suite(SuiteId::assoc_c, serial);
  const auto rhs = run_suite(SuiteId::assoc_c, parallel);
  CHECK(lhs.items_tested == rhs.items_tested);
  CHECK(lhs.failure_count == rhs.failure_count);
}

TEST_CASE("reports are deterministic given the config") {
  RunConfig cfg;
  cfg.region = Region{2, 2, 2};
  const std::string once = run_suite(SuiteId::hom, cfg).to_json().dump();
  const std::string twice = run_suite(SuiteId::hom, cfg).to_json().dump();
  CHECK(once == twice);
}

TEST_CASE("report json carries the contract fields") {
  RunConfig cfg;
  cfg.region = Region{1, 1, 1};
  const nlohmann::json j = run_suite(SuiteId::assoc_c, cfg).to_json();
  for (const char* key : {"check", "params", "convention_notes",
                          "items_tested", "failures", "vacuous",
                          "paper_discrepancies"}) {
    CHECK(j.contains(key));
  }
}

TEST_CASE("vacuous flag propagates through suite reports") {
  RunConfig cfg;
  cfg.region = Region{0, 0, 0};
  const Report report = run_suite(SuiteId::eq21_oracle, cfg);
  CHECK(report.ok());
  CHECK(report.vacuous());
  CHECK(report.to_json()["vacuous"] == true);
}
