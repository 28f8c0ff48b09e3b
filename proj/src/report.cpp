#include "csgk/report.hpp"

#include <algorithm>

namespace csgk {

void Report::add_failure(nlohmann::json item) {
  ++failure_count;
  if (failures.size() < failure_cap) {
    failures.push_back(std::move(item));
  }
}

void Report::merge(const Report& other) {
  items_tested += other.items_tested;
  failure_count += other.failure_count;
  for (const auto& f : other.failures) {
    if (failures.size() >= failure_cap) break;
    failures.push_back(f);
  }
  for (const auto& note : other.convention_notes) {
    if (std::find(convention_notes.begin(), convention_notes.end(), note) ==
        convention_notes.end()) {
      convention_notes.push_back(note);
    }
  }
  for (const auto& d : other.paper_discrepancies) {
    if (std::find(paper_discrepancies.begin(), paper_discrepancies.end(), d) ==
        paper_discrepancies.end()) {
      paper_discrepancies.push_back(d);
    }
  }
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["check"] = check;
  j["params"] = params;
  j["convention_notes"] = convention_notes;
  j["items_tested"] = items_tested;
  j["failure_count"] = failure_count;
  j["failures"] = failures;
  j["ok"] = ok();
  j["vacuous"] = vacuous();
  j["details"] = details;
  j["paper_discrepancies"] = paper_discrepancies;
  return j;
}

std::string Report::text_line() const {
  std::string line = ok() ? "pass" : "FAIL";
  line += "  " + check;
  line += "  items=" + std::to_string(items_tested);
  if (failure_count > 0) {
    line += "  failures=" + std::to_string(failure_count);
  }
  if (vacuous()) line += "  (vacuous)";
  if (!paper_discrepancies.empty()) {
    line += "  discrepancies=" + std::to_string(paper_discrepancies.size());
  }
  return line;
}

}  // namespace csgk
