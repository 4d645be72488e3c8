#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "posetcode/budget.hpp"
#include "posetcode/code.hpp"
#include "posetcode/minimality.hpp"
#include "posetcode/poset.hpp"
#include "posetcode/report.hpp"
#include "posetcode/theorems.hpp"

namespace {

using namespace posetcode;

constexpr int kExitOk = 0;
constexpr int kExitNotMinimal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInconclusive = 4;

// Poset construction materializes on the order of 2^n vectors.
constexpr int kMaxPosetN = 20;

struct RunConfig {
  int m = 0;
  int l = 0;
  std::string ideals;
  std::string set_kind = "d";  // d | d0 | path to a column file
  std::string checker = "both";
  std::string format = "text";
  std::string out;
  std::string matrix_out;
  int max_k = 0;     // 0 = keep the defaults
  unsigned seed = 0; // reserved for randomized suites; unused by the commands
  bool timings = false;
  bool drop_redundant = false;
};

Budget make_budget(const RunConfig& cfg) {
  Budget budget;
  if (cfg.max_k > 0) {
    budget.max_k_definitional = cfg.max_k;
    budget.max_k_geometric = cfg.max_k;
  }
  return budget;
}

std::vector<Method> parse_checker(const std::string& name) {
  if (name == "geometric") return {Method::geometric};
  if (name == "bruteforce") return {Method::definitional};
  if (name == "ab") return {Method::ashikhmin_barg};
  if (name == "both") return {Method::geometric, Method::definitional};
  if (name == "all")
    return {Method::geometric, Method::definitional, Method::ashikhmin_barg};
  throw CLI::ValidationError(
      "--checker must be one of geometric|bruteforce|ab|both|all");
}

void write_output(const RunConfig& cfg, const std::string& payload) {
  if (cfg.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file " + cfg.out);
  file << payload;
}

/// One column per line, '0'/'1' characters, coordinate 1 leftmost.
std::vector<BitVec> read_column_file(const std::string& path, int& k) {
  std::ifstream file(path);
  if (!file)
    throw std::invalid_argument("cannot open defining-set file " + path);
  std::vector<BitVec> columns;
  std::string line;
  k = 0;
  while (std::getline(file, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    BitVec v = BitVec::from_string(line);
    if (k == 0)
      k = v.width();
    else if (v.width() != k)
      throw std::invalid_argument("defining-set file " + path +
                                  ": lines of unequal length");
    columns.push_back(v);
  }
  if (columns.empty())
    throw std::invalid_argument("defining-set file " + path + " is empty");
  return columns;
}

struct ResolvedSet {
  DefiningSet set;
  std::string kind;  // "d", "d0", "custom"
  std::optional<DefiningSetBundle> bundle;
  std::string ideals;
  int m = 0;
  int l = 0;
};

ResolvedSet resolve_set(const RunConfig& cfg) {
  if (cfg.set_kind != "d" && cfg.set_kind != "d0") {
    if (!cfg.ideals.empty())
      throw std::invalid_argument(
          "--ideals cannot be combined with a custom defining-set file");
    if (cfg.m != 0 || cfg.l != 0)
      throw std::invalid_argument(
          "--m/--l cannot be combined with a custom defining-set file");
    int k = 0;
    std::vector<BitVec> columns = read_column_file(cfg.set_kind, k);
    return ResolvedSet{DefiningSet::from_vectors(k, std::move(columns)),
                       "custom", std::nullopt, "", 0, 0};
  }
  if (cfg.m < 1 || cfg.l < 1)
    throw std::invalid_argument("--m and --l are required and must be >= 1");
  if (cfg.m + cfg.l > kMaxPosetN)
    throw std::invalid_argument("n = m + l must be <= " +
                                std::to_string(kMaxPosetN) +
                                " for poset constructions");
  const HierarchicalPoset p(cfg.m, cfg.l);
  if (cfg.set_kind == "d0") {
    if (!cfg.ideals.empty())
      throw std::invalid_argument(
          "--ideals has no effect with --set d0; drop one of the two");
    return ResolvedSet{DefiningSet::from_vectors(p.n(), d0_vectors(p)), "d0",
                       std::nullopt, "", cfg.m, cfg.l};
  }
  if (cfg.ideals.empty())
    throw std::invalid_argument("--ideals is required for --set d");
  IdealFamily family = parse_family(p, cfg.ideals, cfg.drop_redundant);
  DefiningSetBundle bundle = defining_sets(family);
  DefiningSet set = DefiningSet::from_vectors(p.n(), bundle.d);
  std::string ideals = to_text(family);
  return ResolvedSet{std::move(set), "d", std::move(bundle), std::move(ideals),
                     cfg.m, cfg.l};
}

int cmd_construct(const RunConfig& cfg) {
  if (cfg.format != "json" && cfg.format != "text")
    throw std::invalid_argument("construct supports --format json|text");
  const ResolvedSet resolved = resolve_set(cfg);
  const DefiningSet& d = resolved.set;
  const Budget budget = make_budget(cfg);
  const WeightDistribution wd = weight_distribution(d, budget);
  const GeneratorMatrix g = generator_matrix(d);

  if (!cfg.matrix_out.empty()) {
    std::ofstream file(cfg.matrix_out, std::ios::binary);
    if (!file)
      throw std::runtime_error("cannot open matrix file " + cfg.matrix_out);
    file << g.to_text();
  }

  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["command"] = "construct";
    j["kind"] = resolved.kind;
    if (resolved.kind != "custom") {
      j["m"] = resolved.m;
      j["l"] = resolved.l;
      j["n"] = resolved.m + resolved.l;
    }
    if (!resolved.ideals.empty()) j["ideals"] = resolved.ideals;
    j["size"] = d.size();
    if (resolved.bundle) {
      j["size_d0"] = resolved.bundle->d0.size();
      j["size_d1"] = resolved.bundle->d1.size();
    }
    j["k"] = d.k();
    j["rank"] = d.rank();
    nlohmann::ordered_json weights;
    for (const auto& [w, count] : wd.counts)
      weights[std::to_string(w)] = count;
    j["weight_distribution"] = weights;
    j["w_min"] = wd.w_min;
    j["w_max"] = wd.w_max;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const Bits& row : g.rows) rows.push_back(row.to_string());
    j["generator_matrix"] = rows;
    write_output(cfg, j.dump(2) + "\n");
    return kExitOk;
  }

  std::ostringstream out;
  out << "command=construct kind=" << resolved.kind;
  if (resolved.kind != "custom")
    out << " m=" << resolved.m << " l=" << resolved.l
        << " n=" << (resolved.m + resolved.l);
  if (!resolved.ideals.empty()) out << " ideals=" << resolved.ideals;
  out << '\n';
  out << "|D|=" << d.size();
  if (resolved.bundle)
    out << " |D0|=" << resolved.bundle->d0.size()
        << " |D1|=" << resolved.bundle->d1.size();
  out << '\n';
  out << "k=" << d.k() << " rank=" << d.rank() << '\n';
  if (wd.empty()) {
    out << "weight-distribution: (no nonzero codewords)\n";
  } else {
    out << "w_min=" << wd.w_min << " w_max=" << wd.w_max << '\n';
    out << "weight-distribution:";
    for (const auto& [w, count] : wd.counts) out << ' ' << w << ':' << count;
    out << '\n';
  }
  out << "generator-matrix:\n" << g.to_text();
  write_output(cfg, out.str());
  return kExitOk;
}

int cmd_check(const RunConfig& cfg) {
  if (cfg.format != "json" && cfg.format != "text")
    throw std::invalid_argument("check supports --format json|text");
  const ResolvedSet resolved = resolve_set(cfg);
  const DefiningSet& d = resolved.set;
  const Budget budget = make_budget(cfg);
  const std::vector<Method> methods = parse_checker(cfg.checker);

  std::vector<MethodOutcome> outcomes;
  std::optional<Witness> witness;
  for (const Method method : methods) {
    MinimalityVerdict verdict = code_is_minimal_reducing(d, method, budget);
    outcomes.push_back(MethodOutcome{method, verdict.result, ""});
    if (verdict.result == Minimality::not_minimal && !witness)
      witness = verdict.witness;
  }

  bool any_not_minimal = false;
  bool any_minimal = false;
  for (const MethodOutcome& outcome : outcomes) {
    if (*outcome.result == Minimality::not_minimal) any_not_minimal = true;
    if (*outcome.result == Minimality::minimal) any_minimal = true;
  }
  if (any_not_minimal && any_minimal)
    throw std::logic_error("check: the checkers disagree");
  const std::string overall = any_not_minimal ? "not-minimal"
                              : any_minimal   ? "minimal"
                                              : "inconclusive";

  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["command"] = "check";
    j["kind"] = resolved.kind;
    if (resolved.kind != "custom") {
      j["m"] = resolved.m;
      j["l"] = resolved.l;
    }
    if (!resolved.ideals.empty()) j["ideals"] = resolved.ideals;
    j["k"] = d.k();
    j["rank"] = d.rank();
    nlohmann::ordered_json verdicts;
    for (const MethodOutcome& outcome : outcomes)
      verdicts[std::string(method_name(outcome.method))] =
          std::string(minimality_name(*outcome.result));
    j["verdicts"] = verdicts;
    j["verdict"] = overall;
    j["witness_u"] = witness ? witness->u.to_string() : "";
    j["witness_v"] = witness ? witness->v.to_string() : "";
    write_output(cfg, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "command=check kind=" << resolved.kind;
    if (resolved.kind != "custom")
      out << " m=" << resolved.m << " l=" << resolved.l;
    if (!resolved.ideals.empty()) out << " ideals=" << resolved.ideals;
    out << " k=" << d.k() << " rank=" << d.rank() << '\n';
    for (const MethodOutcome& outcome : outcomes)
      out << method_name(outcome.method) << ": "
          << minimality_name(*outcome.result) << '\n';
    if (witness)
      out << "witness: u=" << witness->u.to_string()
          << " v=" << witness->v.to_string() << '\n';
    out << "verdict: " << overall << '\n';
    write_output(cfg, out.str());
  }
  if (any_not_minimal) return kExitNotMinimal;
  if (any_minimal) return kExitOk;
  return kExitInconclusive;
}

struct SweepFlags {
  int m_min = 1;
  int m_max = 5;
  int l_min = 1;
  int l_max = 5;
  int n_max = 10;
  int t_max = 3;
  std::string kinds = "d0,d";
};

int cmd_sweep(const RunConfig& cfg, const SweepFlags& flags,
              const std::string& checker) {
  if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "text")
    throw std::invalid_argument("sweep supports --format json|csv|text");
  SweepOptions options;
  options.m_min = flags.m_min;
  options.m_max = flags.m_max;
  options.l_min = flags.l_min;
  options.l_max = flags.l_max;
  options.n_max = flags.n_max;
  options.t_max = flags.t_max;
  if (options.n_max > kMaxPosetN)
    throw std::invalid_argument("--n-max must be <= " +
                                std::to_string(kMaxPosetN));
  options.methods = parse_checker(checker);
  options.kinds.clear();
  std::stringstream kinds(flags.kinds);
  std::string kind;
  while (std::getline(kinds, kind, ',')) {
    if (kind == "d0")
      options.kinds.push_back(SetKind::d0);
    else if (kind == "d")
      options.kinds.push_back(SetKind::d);
    else
      throw std::invalid_argument("--kinds must list d0 and/or d");
  }
  options.budget = make_budget(cfg);

  const SweepReport report = sweep(options);
  const ReportOptions report_options{cfg.timings};
  if (cfg.format == "json")
    write_output(cfg, to_json(report, report_options));
  else if (cfg.format == "csv")
    write_output(cfg, to_csv(report, report_options));
  else
    write_output(cfg, to_text_summary(report));
  std::cerr << "sweep: " << report.instances.size() << " instances, "
            << report.mismatches.size() << " mismatches\n";
  return report.mismatches.empty() ? kExitOk : kExitNotMinimal;
}

int cmd_witness(const RunConfig& cfg) {
  if (cfg.format != "json" && cfg.format != "text")
    throw std::invalid_argument("witness supports --format json|text");
  const WitnessReport report = verify_known_witnesses();
  if (cfg.format == "json")
    write_output(cfg, to_json(report));
  else
    write_output(cfg, to_text_summary(report));
  return report.all_passed ? kExitOk : kExitNotMinimal;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  SweepFlags sweep_flags;
  std::string sweep_checker = "all";

  CLI::App app{"Binary linear codes from hierarchical poset ideals"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto add_common = [&cfg](CLI::App* cmd, bool with_set) {
    cmd->add_option("--format", cfg.format, "Output format")
        ->capture_default_str();
    cmd->add_option("--out", cfg.out, "Write the report to a file");
    cmd->add_option("--max-k", cfg.max_k,
                    "Override both enumeration budgets (dimension cap)");
    cmd->add_option("--seed", cfg.seed,
                    "Seed for randomized auxiliary suites (recorded only)");
    if (with_set) {
      cmd->add_option("--m", cfg.m, "Lower-level size");
      cmd->add_option("--l", cfg.l, "Upper-level size");
      cmd->add_option("--ideals", cfg.ideals,
                      "Generating ideals, e.g. \"3;3,4\"");
      cmd->add_option("--set", cfg.set_kind,
                      "d, d0, or a file of '0'/'1' columns")
          ->capture_default_str();
      cmd->add_flag("--drop-redundant", cfg.drop_redundant,
                    "Drop non-maximal B-sets from the family");
    }
  };

  CLI::App* construct =
      app.add_subcommand("construct", "Build a code and print its data");
  add_common(construct, true);
  construct->add_option("--matrix-out", cfg.matrix_out,
                        "Also write the generator matrix to a file");

  CLI::App* check =
      app.add_subcommand("check", "Decide whether a code is minimal");
  add_common(check, true);
  check->add_option("--checker", cfg.checker,
                    "geometric|bruteforce|ab|both|all")
      ->capture_default_str();

  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Check every instance in a parameter range against the "
               "prediction table");
  add_common(sweep_cmd, false);
  sweep_cmd->add_option("--m-min", sweep_flags.m_min)->capture_default_str();
  sweep_cmd->add_option("--m-max", sweep_flags.m_max)->capture_default_str();
  sweep_cmd->add_option("--l-min", sweep_flags.l_min)->capture_default_str();
  sweep_cmd->add_option("--l-max", sweep_flags.l_max)->capture_default_str();
  sweep_cmd->add_option("--n-max", sweep_flags.n_max)->capture_default_str();
  sweep_cmd->add_option("--t-max", sweep_flags.t_max)->capture_default_str();
  sweep_cmd->add_option("--kinds", sweep_flags.kinds, "d0,d subset")
      ->capture_default_str();
  sweep_cmd->add_option("--checker", sweep_checker,
                        "geometric|bruteforce|ab|both|all")
      ->capture_default_str();
  sweep_cmd->add_flag("--timings", cfg.timings,
                      "Serialize real elapsed times (not reproducible)");

  CLI::App* witness = app.add_subcommand(
      "witness", "Replay the catalogued non-minimality certificates");
  add_common(witness, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(construct)) return cmd_construct(cfg);
    if (app.got_subcommand(check)) return cmd_check(cfg);
    if (app.got_subcommand(sweep_cmd))
      return cmd_sweep(cfg, sweep_flags, sweep_checker);
    if (app.got_subcommand(witness)) return cmd_witness(cfg);
  } catch (const posetcode::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
