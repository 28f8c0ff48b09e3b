// Acceptance runner: executes every contract criterion at its pinned scale
// and prints one pass/fail line each. Exits 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "csgk/harness.hpp"

using namespace csgk;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::function<bool(std::string&)> run;
};

bool suite_passes(SuiteId id, const RunConfig& cfg, std::string& detail,
                  std::uint64_t* items = nullptr) {
  const Report report = run_suite(id, cfg);
  detail = "items=" + std::to_string(report.items_tested);
  if (!report.ok()) {
    detail += " failures=" + std::to_string(report.failure_count);
    if (!report.failures.empty()) {
      detail += " first=" + report.failures[0].dump();
    }
  }
  if (items != nullptr) *items = report.items_tested;
  return report.ok() && !report.vacuous();
}

FreeWord word_from_bits(std::size_t len, std::uint64_t bits) {
  std::vector<Generator> letters(len);
  for (std::size_t i = 0; i < len; ++i) {
    letters[i] = (bits >> i) & 1 ? Generator::b : Generator::a;
  }
  return FreeWord(std::move(letters));
}

}  // namespace

int main(int argc, char** argv) {
  const std::string vectors_path = argc > 1 ? argv[1] : "data/vectors.jsonl";
  const RunConfig defaults;

  std::vector<Criterion> criteria;

  criteria.push_back({1, "oracle equivalence of the closed-form product",
                      [&](std::string& detail) {
                        std::uint64_t items = 0;
                        const bool ok = suite_passes(SuiteId::eq21_oracle,
                                                     defaults, detail, &items);
                        return ok && items == 124ull * 124ull;
                      }});

  criteria.push_back({2, "associativity on the 4,4,4 region (min bar 3,3,3)",
                      [&](std::string& detail) {
                        std::uint64_t items = 0;
                        const bool ok = suite_passes(SuiteId::assoc_c,
                                                     defaults, detail, &items);
                        return ok && items == 124ull * 124ull * 124ull;
                      }});

  criteria.push_back(
      {3, "confluence: critical pairs and strategy independence",
       [&](std::string& detail) {
         const auto cp = critical_pairs_check(RewriteSystem::c_system());
         if (!cp.ok || cp.superpositions.size() != 1 ||
             cp.superpositions[0].word.str() != "aabb" ||
             cp.superpositions[0].reduct_first.str() != "ab" ||
             cp.superpositions[0].reduct_second.str() != "ab") {
           detail = "critical-pair enumeration did not match";
           return false;
         }
         std::uint64_t words = 0;
         for (std::size_t len = 1; len <= 12; ++len) {
           for (std::uint64_t bits = 0; bits < (1ull << len); ++bits) {
             const FreeWord w = word_from_bits(len, bits);
             if (RewriteSystem::c_system().reduce(w, Strategy::leftmost) !=
                 RewriteSystem::c_system().reduce(w, Strategy::rightmost)) {
               detail = "strategies diverge on " + w.str();
               return false;
             }
             ++words;
           }
         }
         detail = "1 superposition joins; " + std::to_string(words) +
                  " words strategy-checked";
         return true;
       }});

  criteria.push_back(
      {4, "normal-form shape of every irreducible word up to length 12",
       [&](std::string& detail) {
         std::uint64_t irreducible = 0;
         for (std::size_t len = 1; len <= 12; ++len) {
           for (std::uint64_t bits = 0; bits < (1ull << len); ++bits) {
             const FreeWord w = word_from_bits(len, bits);
             if (!RewriteSystem::c_system().is_irreducible(w)) continue;
             ++irreducible;
             if (!normal_shape(w).has_value()) {
               detail = "irreducible word outside the pattern: " + w.str();
               return false;
             }
           }
         }
         detail = std::to_string(irreducible) + " irreducible words";
         return true;
       }});

  criteria.push_back({5, "homomorphism h on all pairs of the 4,4,4 region",
                      [&](std::string& detail) {
                        std::uint64_t items = 0;
                        const bool ok =
                            suite_passes(SuiteId::hom, defaults, detail, &items);
                        return ok && items == 124ull * 124ull;
                      }});

  criteria.push_back(
      {6, "star associativity with full case-branch coverage",
       [&](std::string& detail) {
         const Report report = check_star_associativity(Region{3, 3, 3}, 3);
         detail = "items=" + std::to_string(report.items_tested);
         if (!report.ok()) {
           detail += " first=" + report.failures[0].dump();
           return false;
         }
         if (!report.details["full_branch_coverage"].get<bool>()) {
           detail += " (branch coverage incomplete)";
           return false;
         }
         const std::uint64_t carrier = 63 + 16;  // region elements + B part
         return report.items_tested == carrier * carrier * carrier;
       }});

  criteria.push_back(
      {7, "solution-set claims with caps+2 uniqueness guard",
       [&](std::string& detail) {
         const Report report = run_suite(SuiteId::solve_claims, defaults);
         detail = "items=" + std::to_string(report.items_tested);
         if (!report.ok()) {
           detail += " first=" + report.failures[0].dump();
           return false;
         }
         // Spot-check the three families straight from the solver.
         const Region r{4, 4, 4};
         const auto cell = solve_equation(parse_shape("axb"),
                                          CanonC{0, 1, 0}, r);
         std::vector<CanonC> want;
         for (Exp p = 1; p <= 4; ++p) want.push_back(CanonC{0, p, 0});
         if (cell != want) {
           detail = "a*X*b = ab did not return the ab-power cell";
           return false;
         }
         for (Exp p = 0; p <= 4; ++p) {
           if (solve_equation(parse_shape("axb"), CanonC{0, p + 2, 0}, r) !=
               std::vector<CanonC>{CanonC{1, p, 1}}) {
             detail = "a*X*b = (ab)^{p+2} not unique at p=" +
                      std::to_string(p);
             return false;
           }
           if (solve_equation(parse_shape("xb"), CanonC{0, p + 1, 0}, r) !=
               std::vector<CanonC>{CanonC{0, p, 1}}) {
             detail = "X*b = (ab)^{p+1} not unique at p=" + std::to_string(p);
             return false;
           }
           if (solve_equation(parse_shape("ax"), CanonC{0, p + 1, 0}, r) !=
               std::vector<CanonC>{CanonC{1, p, 0}}) {
             detail = "a*X = (ab)^{p+1} not unique at p=" + std::to_string(p);
             return false;
           }
         }
         return true;
       }});

  criteria.push_back(
      {8, "Green witnesses, H-triviality scan, simplicity witnesses",
       [&](std::string& detail) {
         const auto r_pair =
             green_witness(GreenSide::r, CanonC{0, 0, 1}, CanonC{0, 0, 2}, 2);
         const auto l_pair =
             green_witness(GreenSide::l, CanonC{1, 0, 0}, CanonC{2, 0, 0}, 2);
         if (!r_pair || !l_pair) {
           detail = "generator witnesses not found at maxlen 2";
           return false;
         }
         const auto elements = Region{2, 2, 2}.elements();
         std::uint64_t h_pairs = 0;
         for (const CanonC& x : elements) {
           for (const CanonC& y : elements) {
             if (x == y) continue;
             ++h_pairs;
             if (h_related(x, y, 6)) {
               detail = "nontrivial H-pair " + to_string(x) + " / " +
                        to_string(y);
               return false;
             }
           }
         }
         std::uint64_t s_pairs = 0;
         for (const CanonC& x : elements) {
           for (const CanonC& y : elements) {
             ++s_pairs;
             if (!simple_witness(x, y, default_simple_witness_bound(x, y))) {
               detail = "no simplicity witness for " + to_string(x) + " -> " +
                        to_string(y);
               return false;
             }
           }
         }
         detail = std::to_string(h_pairs) + " H-pairs scanned, " +
                  std::to_string(s_pairs) + " simplicity pairs witnessed";
         return true;
       }});

  criteria.push_back({9, "idempotent-freeness on the 6,6,6 region",
                      [&](std::string& detail) {
                        std::uint64_t items = 0;
                        const bool ok = suite_passes(SuiteId::idempotent_free,
                                                     defaults, detail, &items);
                        return ok && items == 342;
                      }});

  criteria.push_back(
      {10, "non-stability: b*C inside ab*C, b outside b*C, b = ab*b",
       [&](std::string& detail) {
         if (!suite_passes(SuiteId::stability, defaults, detail)) return false;
         if (mul_c(CanonC{0, 1, 0}, CanonC{1, 0, 0}) != CanonC{1, 0, 0}) {
           detail = "b = ab*b failed";
           return false;
         }
         for (const CanonC& z : Region{8, 8, 8}.elements()) {
           if (mul_c(CanonC{1, 0, 0}, z) == CanonC{1, 0, 0}) {
             detail = "b = b*z at z=" + to_string(z);
             return false;
           }
         }
         return true;
       }});

  criteria.push_back({11, "telescoping a^n b^n = ab for n up to 20",
                      [&](std::string& detail) {
                        return suite_passes(SuiteId::telescope, defaults,
                                            detail);
                      }});

  criteria.push_back({12, "injectivity of the two-sided shifts",
                      [&](std::string& detail) {
                        std::uint64_t items = 0;
                        const bool ok = suite_passes(SuiteId::injectivity,
                                                     defaults, detail, &items);
                        return ok && items == 16;  // shifts i,j <= 3
                      }});

  criteria.push_back({13, "tau_p product conditions, metric axioms, base "
                          "compatibility",
                      [&](std::string& detail) {
                        return suite_passes(SuiteId::tau_p, defaults, detail);
                      }});

  criteria.push_back(
      {14, "extension topology continuity cases",
       [&](std::string& detail) {
         const Report report = run_suite(SuiteId::ext_topology, defaults);
         detail = "items=" + std::to_string(report.items_tested);
         if (!report.ok() || report.vacuous()) return false;
         // Every case must have exercised all three sub-statements.
         const auto& coverage = report.details["subcase_coverage"];
         for (const char* case_no : {"1", "2", "3"}) {
           for (const char* sub : {"a", "b", "c"}) {
             if (!coverage[case_no].contains(sub) ||
                 coverage[case_no][sub].get<std::uint64_t>() == 0) {
               detail += std::string(" missing sub-case ") + case_no + sub;
               return false;
             }
           }
         }
         detail += "; sub-cases a-c hit in all three cases";
         return true;
       }});

  criteria.push_back({15, "zero topology conditions",
                      [&](std::string& detail) {
                        return suite_passes(SuiteId::zero_topology, defaults,
                                            detail);
                      }});

  criteria.push_back(
      {16, "fixed-point inclusions and retract behavior",
       [&](std::string& detail) {
         if (!suite_passes(SuiteId::fix_sets, defaults, detail)) return false;
         const Region region{5, 3, 5};
         for (Exp k = 1; k <= 3; ++k) {
           for (Exp l = 0; l <= 2; ++l) {
             const Report r = check_translation_retract(k, l, region);
             if (!r.ok()) {
               detail = "image/Fix assertion failed at k=" +
                        std::to_string(k) + " l=" + std::to_string(l);
               return false;
             }
             // Every element on the boundary exponent must be recorded as a
             // pointwise-idempotence exception: 4 * 6 = 24 per side.
             const auto lam =
                 r.details["lambda_exceptions_at_boundary"].get<std::uint64_t>();
             const auto rho =
                 r.details["rho_exceptions_at_boundary"].get<std::uint64_t>();
             if (lam != 24 || rho != 24) {
               detail = "boundary exception count off at k=" +
                        std::to_string(k) + " l=" + std::to_string(l) +
                        " (lambda=" + std::to_string(lam) +
                        ", rho=" + std::to_string(rho) + ")";
               return false;
             }
           }
         }
         detail += "; boundary exceptions recorded for all k,l";
         return true;
       }});

  criteria.push_back(
      {17, "regression corpus replays exactly",
       [&](std::string& detail) {
         const auto records = load_vectors(vectors_path);
         const Report report = replay_vectors(records);
         detail = std::to_string(records.size()) + " records";
         if (!report.ok()) {
           detail += " first=" + report.failures[0].dump();
           return false;
         }
         return !report.vacuous();
       }});

  criteria.push_back(
      {18, "default run emits exactly the two documented discrepancies",
       [&](std::string& detail) {
         const RunSummary summary = run_all(defaults);
         if (!summary.ok()) {
           detail = "default run failed";
           return false;
         }
         const auto discrepancies = summary.paper_discrepancies();
         std::multiset<std::string> ids;
         for (const auto& d : discrepancies) {
           ids.insert(d.at("id").get<std::string>());
         }
         detail = std::to_string(discrepancies.size()) + " annotations";
         return ids == std::multiset<std::string>{"nested-axb-solution-index",
                                                  "xb-ax-solution-index"};
       }});

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = false;
    try {
      pass = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::printf("[%2d] %s  %s (%s, %lld ms)\n", criterion.number,
                pass ? "PASS" : "FAIL", criterion.title.c_str(),
                detail.c_str(), static_cast<long long>(ms));
    std::fflush(stdout);
    if (!pass) ++failures;
  }
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
