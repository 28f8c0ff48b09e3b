#include <algorithm>
#include <fstream>
#include <set>

#include "csgk/harness.hpp"

namespace csgk {

namespace {

const std::set<std::string, std::less<>> kKnownOps = {
    "parse_word",
    "reduce_c",
    "to_normal_c",
    "from_normal_c",
    "to_normal_b",
    "oracle_mul_c",
    "critical_pairs",
    "mul_c",
    "mul_b",
    "pow_c",
    "hom_h",
    "hom_compat",
    "phi",
    "enumerate_region",
    "region_count",
    "solve_equation",
    "green_witness",
    "h_related",
    "simple_witness",
    "apply_translation",
    "is_fixed",
    "is_idempotent",
    "star_mul",
    "zero_mul",
    "check_star_associativity",
    "check_pi_homomorphism",
    "nbhd_tau_p",
    "metric_tau_p",
    "check_tau_p_product",
    "check_tau_p_metric_base",
    "nbhd_ext",
    "check_ext_continuity",
    "nbhd_zero",
    "nbhd_zero_contains",
    "check_zero_continuity",
    "check_fix_inclusions",
    "check_translation_retract",
};

[[noreturn]] void bad_args(const std::string& what) {
  throw Error(ErrorCode::parse_error, "vector args: " + what);
}

const nlohmann::json& field(const nlohmann::json& args, const char* name) {
  auto it = args.find(name);
  if (it == args.end()) bad_args(std::string("missing field '") + name + "'");
  return *it;
}

std::string str_field(const nlohmann::json& args, const char* name) {
  const auto& value = field(args, name);
  if (!value.is_string()) {
    bad_args(std::string("field '") + name + "' must be a string");
  }
  return value.get<std::string>();
}

Exp num_field(const nlohmann::json& args, const char* name) {
  const auto& value = field(args, name);
  if (!value.is_number_unsigned()) {
    bad_args(std::string("field '") + name +
             "' must be a nonnegative integer");
  }
  return value.get<Exp>();
}

CanonC canon_field(const nlohmann::json& args, const char* name) {
  return parse_canon(str_field(args, name));
}

Side side_field(const nlohmann::json& args) {
  const auto text = str_field(args, "side");
  if (text == "left") return Side::left;
  if (text == "right") return Side::right;
  bad_args("side must be 'left' or 'right'");
}

GreenSide green_side_field(const nlohmann::json& args) {
  const auto text = str_field(args, "side");
  if (text == "r") return GreenSide::r;
  if (text == "l") return GreenSide::l;
  bad_args("side must be 'r' or 'l'");
}

nlohmann::json sorted_strings(std::vector<std::string> items) {
  std::sort(items.begin(), items.end());
  return nlohmann::json(items);
}

nlohmann::json canon_list(const std::vector<CanonC>& xs) {
  std::vector<std::string> items;
  items.reserve(xs.size());
  for (const auto& x : xs) items.push_back(to_string(x));
  return nlohmann::json(items);  // already in search order
}

RewriteSystem system_from_args(const nlohmann::json& args) {
  const auto& chosen = field(args, "system");
  if (chosen.is_string()) {
    const auto name = chosen.get<std::string>();
    if (name == "c") return RewriteSystem::c_system();
    if (name == "bicyclic") return RewriteSystem::b_system();
    bad_args("unknown rewrite system '" + name + "'");
  }
  if (!chosen.is_array()) bad_args("system must be a name or a rule list");
  std::vector<RewriteRule> rules;
  for (const auto& rule : chosen) {
    if (!rule.is_array() || rule.size() != 2) {
      bad_args("each rule must be a [lhs, rhs] pair");
    }
    rules.push_back({FreeWord::parse(rule[0].get<std::string>()),
                     FreeWord::parse(rule[1].get<std::string>())});
  }
  return RewriteSystem("custom", std::move(rules));
}

nlohmann::json eval_op(const std::string& op, const nlohmann::json& args) {
  if (op == "parse_word") {
    return FreeWord::parse(str_field(args, "text")).str();
  }
  if (op == "reduce_c") {
    return reduce_c(FreeWord::parse(str_field(args, "word"))).str();
  }
  if (op == "to_normal_c") {
    return to_string(to_normal_c(FreeWord::parse(str_field(args, "word"))));
  }
  if (op == "from_normal_c") {
    return from_normal_c(canon_field(args, "x")).str();
  }
  if (op == "to_normal_b") {
    return to_string(to_normal_b(FreeWord::parse(str_field(args, "word"))));
  }
  if (op == "oracle_mul_c") {
    return to_string(oracle_mul_c(canon_field(args, "x"),
                                  canon_field(args, "y")));
  }
  if (op == "critical_pairs") {
    const auto report = critical_pairs_check(system_from_args(args));
    nlohmann::json out = {{"ok", report.ok},
                          {"superpositions", report.superpositions.size()}};
    if (report.counterexample) {
      out["counterexample"] = report.counterexample->str();
    }
    return out;
  }
  if (op == "mul_c") {
    return to_string(mul_c(canon_field(args, "x"), canon_field(args, "y")));
  }
  if (op == "mul_b") {
    return to_string(mul_b(parse_bicyclic(str_field(args, "x")),
                           parse_bicyclic(str_field(args, "y"))));
  }
  if (op == "pow_c") {
    return to_string(pow_c(canon_field(args, "x"), num_field(args, "n")));
  }
  if (op == "hom_h") {
    return to_string(hom_h(canon_field(args, "x")));
  }
  if (op == "hom_compat") {
    const CanonC x = canon_field(args, "x");
    const CanonC y = canon_field(args, "y");
    return {{"h_of_product", to_string(hom_h(mul_c(x, y)))},
            {"product_of_h", to_string(mul_b(hom_h(x), hom_h(y)))}};
  }
  if (op == "phi") {
    return to_string(
        phi(num_field(args, "i"), num_field(args, "j"), canon_field(args, "x")));
  }
  if (op == "enumerate_region") {
    return canon_list(
        enumerate_region(parse_region(str_field(args, "region"))));
  }
  if (op == "region_count") {
    return parse_region(str_field(args, "region")).size();
  }
  if (op == "solve_equation") {
    return canon_list(solve_equation(parse_shape(str_field(args, "shape")),
                                     canon_field(args, "rhs"),
                                     parse_region(str_field(args, "region"))));
  }
  if (op == "green_witness") {
    const auto pair =
        green_witness(green_side_field(args), canon_field(args, "x"),
                      canon_field(args, "y"), num_field(args, "maxlen"));
    if (!pair) return {{"found", false}};
    return {{"found", true}, {"u", pair->u.str()}, {"v", pair->v.str()}};
  }
  if (op == "h_related") {
    return h_related(canon_field(args, "x"), canon_field(args, "y"),
                     num_field(args, "maxlen"));
  }
  if (op == "simple_witness") {
    const CanonC x = canon_field(args, "x");
    const CanonC y = canon_field(args, "y");
    const std::size_t maxlen = args.contains("maxlen")
                                   ? num_field(args, "maxlen")
                                   : default_simple_witness_bound(x, y);
    return {{"found", simple_witness(x, y, maxlen).has_value()}};
  }
  if (op == "apply_translation") {
    return to_string(apply_translation(side_field(args),
                                       canon_field(args, "c"),
                                       canon_field(args, "x")));
  }
  if (op == "is_fixed") {
    return is_fixed(side_field(args), canon_field(args, "c"),
                    canon_field(args, "x"));
  }
  if (op == "is_idempotent") {
    return is_idempotent(canon_field(args, "x"));
  }
  if (op == "star_mul") {
    return to_string(star_mul(parse_ext(str_field(args, "x")),
                              parse_ext(str_field(args, "y"))));
  }
  if (op == "zero_mul") {
    return to_string(zero_mul(parse_ext_zero(str_field(args, "x")),
                              parse_ext_zero(str_field(args, "y"))));
  }
  if (op == "check_star_associativity") {
    const auto report =
        check_star_associativity(parse_region(str_field(args, "region")),
                                 num_field(args, "bicyclic_cap"));
    return {{"ok", report.ok()},
            {"full_branch_coverage", report.details.at("full_branch_coverage")}};
  }
  if (op == "check_pi_homomorphism") {
    const auto report =
        check_pi_homomorphism(parse_region(str_field(args, "region")));
    return {{"ok", report.ok()}};
  }
  if (op == "nbhd_tau_p") {
    const TauPParams params{num_field(args, "p"), num_field(args, "alpha"),
                            num_field(args, "lambda_max")};
    std::vector<std::string> items;
    for (const auto& y : nbhd_tau_p(canon_field(args, "x"), params)) {
      items.push_back(to_string(y));
    }
    return nlohmann::json(items);  // ascending lambda order
  }
  if (op == "metric_tau_p") {
    return to_string(metric_tau_p(canon_field(args, "x"),
                                  canon_field(args, "y"),
                                  num_field(args, "p")));
  }
  if (op == "check_tau_p_product") {
    const TauPParams params{num_field(args, "p"), num_field(args, "alpha"),
                            num_field(args, "lambda_max")};
    const auto report = check_tau_p_product(canon_field(args, "x"),
                                            canon_field(args, "y"), params);
    return {{"ok", report.ok()},
            {"condition", report.details.at("condition")},
            {"target", report.details.at("target")}};
  }
  if (op == "check_tau_p_metric_base") {
    const TauPParams params{num_field(args, "p"), num_field(args, "alpha"),
                            num_field(args, "lambda_max")};
    const auto report = check_tau_p_metric_base(canon_field(args, "x"), params);
    return {{"ok", report.ok()}};
  }
  if (op == "nbhd_ext") {
    std::vector<std::string> items;
    for (const auto& y :
         nbhd_ext(parse_ext(str_field(args, "x")), num_field(args, "n"),
                  num_field(args, "kcap"))) {
      items.push_back(to_string(y));
    }
    return sorted_strings(std::move(items));
  }
  if (op == "check_ext_continuity") {
    const Exp case_no = num_field(args, "case");
    ExtContinuityCase c;
    if (case_no == 1) {
      c = ExtCase1{num_field(args, "i"), num_field(args, "k"),
                   num_field(args, "m"), num_field(args, "p")};
    } else if (case_no == 2) {
      c = ExtCase2{num_field(args, "i"), num_field(args, "k"),
                   canon_field(args, "y")};
    } else if (case_no == 3) {
      c = ExtCase3{canon_field(args, "x"), num_field(args, "m"),
                   num_field(args, "p")};
    } else {
      bad_args("case must be 1, 2 or 3");
    }
    const auto report =
        check_ext_continuity(c, num_field(args, "u"), num_field(args, "kcap"));
    return {{"ok", report.ok()},
            {"subcase", report.details.at("subcase")},
            {"target", report.details.at("target")}};
  }
  if (op == "nbhd_zero") {
    std::vector<std::string> items;
    for (const auto& y : nbhd_zero(num_field(args, "n"),
                                   parse_region(str_field(args, "region")))) {
      items.push_back(to_string(y));
    }
    return sorted_strings(std::move(items));
  }
  if (op == "nbhd_zero_contains") {
    const auto elems = nbhd_zero(num_field(args, "n"),
                                 parse_region(str_field(args, "region")));
    const auto probe = parse_ext_zero(str_field(args, "elem"));
    return std::find(elems.begin(), elems.end(), probe) != elems.end();
  }
  if (op == "check_zero_continuity") {
    std::optional<CanonC> x;
    if (args.contains("x")) x = canon_field(args, "x");
    const auto report = check_zero_continuity(
        x, num_field(args, "i"), parse_region(str_field(args, "region")));
    return {{"ok", report.ok()},
            {"conditions", report.details.at("conditions")}};
  }
  if (op == "check_fix_inclusions") {
    const auto report = check_fix_inclusions(
        num_field(args, "n"), parse_region(str_field(args, "region")));
    return {{"ok", report.ok()}, {"families", report.details.at("families")}};
  }
  if (op == "check_translation_retract") {
    const auto report = check_translation_retract(
        num_field(args, "k"), num_field(args, "l"),
        parse_region(str_field(args, "region")));
    return {{"ok", report.ok()},
            {"lambda_exceptions_at_boundary",
             report.details.at("lambda_exceptions_at_boundary")},
            {"rho_exceptions_at_boundary",
             report.details.at("rho_exceptions_at_boundary")}};
  }
  throw Error(ErrorCode::parse_error, "unknown op '" + op + "'");
}

}  // namespace

bool is_known_vector_op(std::string_view op) {
  return kKnownOps.find(op) != kKnownOps.end();
}

std::vector<VectorRecord> load_vectors(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::io_error, "cannot open '" + path + "'");
  }
  std::vector<VectorRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::parse_error,
                  "line " + std::to_string(line_no) + ": " + e.what());
    }
    auto reject = [line_no](const std::string& why) -> Error {
      return Error(ErrorCode::parse_error,
                   "line " + std::to_string(line_no) + ": " + why);
    };
    if (!j.is_object()) throw reject("record must be a JSON object");
    if (!j.contains("op") || !j["op"].is_string()) {
      throw reject("missing string field 'op'");
    }
    VectorRecord record;
    record.line = line_no;
    record.op = j["op"].get<std::string>();
    if (!is_known_vector_op(record.op)) {
      throw reject("unknown op '" + record.op + "'");
    }
    if (!j.contains("args") || !j["args"].is_object()) {
      throw reject("missing object field 'args'");
    }
    record.args = j["args"];
    if (!j.contains("expect")) throw reject("missing field 'expect'");
    record.expect = j["expect"];
    if (j.contains("provenance")) {
      const auto& prov = j["provenance"];
      if (!prov.is_object()) throw reject("provenance must be an object");
      record.provenance.tag = prov.value("tag", "");
      record.provenance.cite = prov.value("cite", "");
      if (!record.provenance.tag.empty() && record.provenance.tag != "paper" &&
          record.provenance.tag != "trivial" &&
          record.provenance.tag != "derived") {
        throw reject("provenance tag must be paper, trivial or derived");
      }
    }
    for (const auto& [key, value] : j.items()) {
      (void)value;
      if (key != "op" && key != "args" && key != "expect" &&
          key != "provenance") {
        throw reject("unknown field '" + key + "'");
      }
    }
    records.push_back(std::move(record));
  }
  return records;
}

nlohmann::json eval_vector_op(const VectorRecord& record) {
  try {
    return eval_op(record.op, record.args);
  } catch (const Error& e) {
    // Expected-error records compare against this encoding.
    return nlohmann::json{{"error", std::string(to_string(e.code()))}};
  }
}

Report replay_vectors(const std::vector<VectorRecord>& records) {
  Report report;
  report.check = "replay";
  for (const auto& record : records) {
    const nlohmann::json actual = eval_vector_op(record);
    ++report.items_tested;
    if (actual != record.expect) {
      nlohmann::json failure = {{"line", record.line},
                                {"op", record.op},
                                {"expected", record.expect},
                                {"actual", actual}};
      if (!record.provenance.tag.empty()) {
        failure["provenance"] = record.provenance.tag;
      }
      report.add_failure(std::move(failure));
    }
  }
  report.details["records"] = records.size();
  return report;
}

}  // namespace csgk
