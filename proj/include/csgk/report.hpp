#ifndef CSGK_REPORT_HPP
#define CSGK_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace csgk {

// Outcome of one verification check. A check passes when `failures` is
// empty; a check that tested nothing is flagged vacuous rather than green.
// Stored failures are capped so a broken run stays readable.
struct Report {
  static constexpr std::size_t failure_cap = 32;

  std::string check;
  nlohmann::json params = nlohmann::json::object();
  std::vector<std::string> convention_notes;
  std::uint64_t items_tested = 0;
  std::uint64_t failure_count = 0;
  std::vector<nlohmann::json> failures;  // first failure_cap of them
  nlohmann::json details = nlohmann::json::object();
  std::vector<nlohmann::json> paper_discrepancies;

  bool ok() const { return failure_count == 0; }
  bool vacuous() const { return items_tested == 0; }

  void add_failure(nlohmann::json item);
  // Folds `other` into this report: counts add, failures concatenate,
  // notes and discrepancies union. Order independent up to final sorting.
  void merge(const Report& other);

  nlohmann::json to_json() const;
  std::string text_line() const;
};

}  // namespace csgk

#endif  // CSGK_REPORT_HPP
