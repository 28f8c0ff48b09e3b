#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "csgk/harness.hpp"

namespace {

using csgk::RunConfig;

// Exit codes: 0 all pass, 1 check failure or vector mismatch, 2 usage or
// configuration error.
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct ConfigFlags {
  std::string config_file;
  std::string region;
  std::optional<csgk::Exp> bicyclic_cap;
  std::vector<csgk::Exp> primes;
  std::optional<csgk::Exp> single_prime;
  std::optional<csgk::Exp> alpha_max;
  std::optional<csgk::Exp> lambda_factor;
  std::optional<std::size_t> witness_maxlen;
  std::string format;
  std::optional<unsigned> workers;
};

void add_config_flags(CLI::App& cmd, ConfigFlags& flags) {
  cmd.add_option("--config", flags.config_file,
                 "JSON config file; CLI flags override it");
  cmd.add_option("--region", flags.region, "region caps K,L,M");
  cmd.add_option("--bicyclic-cap", flags.bicyclic_cap, "bicyclic cap");
  cmd.add_option("--primes", flags.primes, "primes for tau-p checks");
  cmd.add_option("--p", flags.single_prime, "single prime (shorthand)");
  cmd.add_option("--alpha", flags.alpha_max, "maximum alpha");
  cmd.add_option("--lambda-factor", flags.lambda_factor,
                 "lambda_max = lambda-factor * p^alpha");
  cmd.add_option("--witness-maxlen", flags.witness_maxlen,
                 "witness search bound");
  cmd.add_option("--format", flags.format, "output format: json|text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd.add_option("--workers", flags.workers, "parallel worker count");
}

RunConfig resolve_config(const ConfigFlags& flags) {
  RunConfig cfg;
  if (!flags.config_file.empty()) {
    cfg = csgk::load_config_file(flags.config_file, cfg);
  }
  if (!flags.region.empty()) cfg.region = csgk::parse_region(flags.region);
  if (flags.bicyclic_cap) cfg.bicyclic_cap = *flags.bicyclic_cap;
  if (!flags.primes.empty()) cfg.primes = flags.primes;
  if (flags.single_prime) cfg.primes = {*flags.single_prime};
  if (flags.alpha_max) cfg.alpha_max = *flags.alpha_max;
  if (flags.lambda_factor) cfg.lambda_factor = *flags.lambda_factor;
  if (flags.witness_maxlen) cfg.witness_maxlen = *flags.witness_maxlen;
  if (flags.format == "json") cfg.format = csgk::OutputFormat::json;
  if (flags.format == "text") cfg.format = csgk::OutputFormat::text;
  if (flags.workers) cfg.workers = *flags.workers;
  csgk::validate(cfg);
  return cfg;
}

std::int64_t unix_now() {
  return std::chrono::duration_cast<std::chrono::seconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

int emit_report(const csgk::Report& report, const RunConfig& cfg) {
  if (cfg.format == csgk::OutputFormat::text) {
    std::cout << report.text_line() << "\n";
    for (const auto& f : report.failures) {
      std::cout << "  failure: " << f.dump() << "\n";
    }
  } else {
    nlohmann::json j = report.to_json();
    j["generated_at"] = unix_now();
    std::cout << j.dump(2) << "\n";
  }
  return report.ok() ? 0 : kExitFailure;
}

int emit_summary(const csgk::RunSummary& summary, const RunConfig& cfg) {
  if (cfg.format == csgk::OutputFormat::text) {
    for (const auto& suite : summary.suites) {
      std::cout << suite.text_line() << "\n";
    }
    for (const auto& d : summary.paper_discrepancies()) {
      std::cout << "discrepancy: " << d["id"].get<std::string>() << ": "
                << d["note"].get<std::string>() << "\n";
    }
    std::cout << (summary.ok() ? "all checks passed" : "CHECKS FAILED")
              << " (" << summary.total_items() << " items)\n";
  } else {
    nlohmann::json j = summary.to_json();
    j["generated_at"] = unix_now();
    std::cout << j.dump(2) << "\n";
  }
  return summary.ok() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation and desk-scale verification for the "
               "semigroup <a,b | a^2b=a, ab^2=b>, the bicyclic monoid and "
               "their extensions"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  std::string word_text;
  std::string system_name = "c";
  std::size_t max_letters = csgk::FreeWord::default_parse_cap;
  auto* reduce_cmd =
      app.add_subcommand("reduce", "rewrite a word to its normal form");
  reduce_cmd->add_option("word", word_text, "word over {a,b}")->required();
  reduce_cmd->add_option("--system", system_name, "c|bicyclic")
      ->check(CLI::IsMember({"c", "bicyclic"}));
  reduce_cmd->add_option("--max-letters", max_letters, "parse length cap");

  std::string x_text, y_text;
  auto* mul_cmd = app.add_subcommand("mul", "multiply two elements");
  mul_cmd->add_option("--x", x_text, "left factor")->required();
  mul_cmd->add_option("--y", y_text, "right factor")->required();
  mul_cmd->add_option("--system", system_name, "c|bicyclic")
      ->check(CLI::IsMember({"c", "bicyclic"}));

  auto* star_cmd =
      app.add_subcommand("star", "multiply in an extension semigroup");
  star_cmd->add_option("--x", x_text, "left factor, C:k,l,m / B:i,j / 0")
      ->required();
  star_cmd->add_option("--y", y_text, "right factor")->required();
  std::string ext_system = "ext";
  star_cmd->add_option("--system", ext_system, "ext|zero")
      ->check(CLI::IsMember({"ext", "zero"}));

  auto* hom_cmd = app.add_subcommand("hom", "project into the bicyclic monoid");
  hom_cmd->add_option("--x", x_text, "element k,l,m")->required();

  std::string shape_text, rhs_text, region_text = "4,4,4";
  auto* solve_cmd =
      app.add_subcommand("solve", "solve an equation over a finite region");
  solve_cmd->add_option("--shape", shape_text, "axb|xb|ax|lx:k,l,m|xr:k,l,m")
      ->required();
  solve_cmd->add_option("--rhs", rhs_text, "right-hand side k,l,m")->required();
  solve_cmd->add_option("--region", region_text, "region caps K,L,M");

  std::string relation = "r";
  std::size_t maxlen = 6;
  bool maxlen_given = false;
  auto* green_cmd =
      app.add_subcommand("green", "bounded witness search for relations");
  green_cmd->add_option("--relation", relation, "r|l|h|simple")
      ->check(CLI::IsMember({"r", "l", "h", "simple"}));
  green_cmd->add_option("--x", x_text, "element k,l,m")->required();
  green_cmd->add_option("--y", y_text, "element k,l,m")->required();
  green_cmd->add_option("--maxlen", maxlen, "word length bound")
      ->each([&maxlen_given](const std::string&) { maxlen_given = true; });

  std::string topology = "tau-p", center_text;
  csgk::Exp prime = 2, alpha = 1, lambda_max = 4, nbhd_n = 1, kcap = 8;
  auto* nbhd_cmd = app.add_subcommand("nbhd", "list a basic neighborhood");
  nbhd_cmd->add_option("--topology", topology, "tau-p|ext|zero")
      ->check(CLI::IsMember({"tau-p", "ext", "zero"}));
  nbhd_cmd->add_option("--center", center_text,
                       "center element (k,l,m / C:k,l,m / B:i,j)");
  nbhd_cmd->add_option("--p", prime, "prime (tau-p)");
  nbhd_cmd->add_option("--alpha", alpha, "index alpha (tau-p)");
  nbhd_cmd->add_option("--lambda-max", lambda_max, "lambda truncation (tau-p)");
  nbhd_cmd->add_option("--n", nbhd_n, "index n (ext/zero)");
  nbhd_cmd->add_option("--kcap", kcap, "truncation cap (ext)");
  nbhd_cmd->add_option("--region", region_text, "region caps (zero)");

  auto* metric_cmd = app.add_subcommand("metric", "exact distance in tau_p");
  metric_cmd->add_option("--x", x_text, "element k,l,m")->required();
  metric_cmd->add_option("--y", y_text, "element k,l,m")->required();
  metric_cmd->add_option("--p", prime, "prime");

  ConfigFlags check_flags;
  std::string suite_name;
  auto* check_cmd = app.add_subcommand("check", "run a named check suite");
  check_cmd->add_option("suite", suite_name, "suite id or 'all'")->required();
  add_config_flags(*check_cmd, check_flags);

  ConfigFlags replay_flags;
  std::string vectors_path;
  auto* replay_cmd =
      app.add_subcommand("replay", "replay a JSONL vector corpus");
  replay_cmd->add_option("file", vectors_path, "vectors file")->required();
  add_config_flags(*replay_cmd, replay_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitUsage;
  }

  try {
    if (reduce_cmd->parsed()) {
      const csgk::FreeWord w = csgk::FreeWord::parse(word_text, max_letters);
      if (system_name == "c") {
        const csgk::FreeWord reduced = csgk::reduce_c(w);
        std::cout << reduced.str() << "  ("
                  << csgk::to_string(csgk::to_normal_c(w)) << ")\n";
      } else {
        const csgk::BicyclicNF nf = csgk::to_normal_b(w);
        std::cout << csgk::from_normal_b(nf).str() << "  ("
                  << csgk::to_string(nf) << ")\n";
      }
      return 0;
    }
    if (mul_cmd->parsed()) {
      if (system_name == "c") {
        std::cout << csgk::to_string(csgk::mul_c(csgk::parse_canon(x_text),
                                                 csgk::parse_canon(y_text)))
                  << "\n";
      } else {
        std::cout << csgk::to_string(
                         csgk::mul_b(csgk::parse_bicyclic(x_text),
                                     csgk::parse_bicyclic(y_text)))
                  << "\n";
      }
      return 0;
    }
    if (star_cmd->parsed()) {
      if (ext_system == "ext") {
        std::cout << csgk::to_string(csgk::star_mul(csgk::parse_ext(x_text),
                                                    csgk::parse_ext(y_text)))
                  << "\n";
      } else {
        std::cout << csgk::to_string(
                         csgk::zero_mul(csgk::parse_ext_zero(x_text),
                                        csgk::parse_ext_zero(y_text)))
                  << "\n";
      }
      return 0;
    }
    if (hom_cmd->parsed()) {
      std::cout << csgk::to_string(csgk::hom_h(csgk::parse_canon(x_text)))
                << "\n";
      return 0;
    }
    if (solve_cmd->parsed()) {
      const auto solutions = csgk::solve_equation(
          csgk::parse_shape(shape_text), csgk::parse_canon(rhs_text),
          csgk::parse_region(region_text));
      nlohmann::json out = {{"shape", shape_text},
                            {"rhs", rhs_text},
                            {"region_searched", region_text},
                            {"solutions", nlohmann::json::array()}};
      for (const auto& s : solutions) {
        out["solutions"].push_back(csgk::to_string(s));
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (green_cmd->parsed()) {
      const csgk::CanonC x = csgk::parse_canon(x_text);
      const csgk::CanonC y = csgk::parse_canon(y_text);
      if (relation == "h") {
        std::cout << (csgk::h_related(x, y, maxlen) ? "related-within-bound"
                                                    : "no-witness-within-bound")
                  << "\n";
        return 0;
      }
      std::optional<csgk::WitnessPair> pair;
      if (relation == "simple") {
        const std::size_t bound =
            maxlen_given ? maxlen : csgk::default_simple_witness_bound(x, y);
        pair = csgk::simple_witness(x, y, bound);
      } else {
        pair = csgk::green_witness(relation == "r" ? csgk::GreenSide::r
                                                   : csgk::GreenSide::l,
                                   x, y, maxlen);
      }
      if (pair) {
        std::cout << "u=" << pair->u.str() << " v=" << pair->v.str() << "\n";
      } else {
        std::cout << "no-witness-within-bound\n";
      }
      return 0;
    }
    if (nbhd_cmd->parsed()) {
      if (topology == "tau-p") {
        const csgk::TauPParams params{prime, alpha, lambda_max};
        for (const auto& y :
             csgk::nbhd_tau_p(csgk::parse_canon(center_text), params)) {
          std::cout << csgk::to_string(y) << "\n";
        }
      } else if (topology == "ext") {
        for (const auto& y :
             csgk::nbhd_ext(csgk::parse_ext(center_text), nbhd_n, kcap)) {
          std::cout << csgk::to_string(y) << "\n";
        }
      } else {
        for (const auto& y :
             csgk::nbhd_zero(nbhd_n, csgk::parse_region(region_text))) {
          std::cout << csgk::to_string(y) << "\n";
        }
      }
      return 0;
    }
    if (metric_cmd->parsed()) {
      std::cout << csgk::to_string(csgk::metric_tau_p(
                       csgk::parse_canon(x_text), csgk::parse_canon(y_text),
                       prime))
                << "\n";
      return 0;
    }
    if (check_cmd->parsed()) {
      const RunConfig cfg = resolve_config(check_flags);
      if (suite_name == "all") {
        return emit_summary(csgk::run_all(cfg), cfg);
      }
      const auto id = csgk::parse_suite(suite_name);
      if (!id) {
        std::cerr << "unknown suite '" << suite_name << "'\n";
        return kExitUsage;
      }
      return emit_report(csgk::run_suite(*id, cfg), cfg);
    }
    if (replay_cmd->parsed()) {
      const RunConfig cfg = resolve_config(replay_flags);
      const auto records = csgk::load_vectors(vectors_path);
      return emit_report(csgk::replay_vectors(records), cfg);
    }
  } catch (const csgk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
