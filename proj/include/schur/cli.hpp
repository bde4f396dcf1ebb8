// Copyright 2026 The schur-choice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCHUR_CLI_HPP
#define SCHUR_CLI_HPP

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "schur/audit.hpp"
#include "schur/choice.hpp"
#include "schur/diversity.hpp"
#include "schur/error.hpp"
#include "schur/frontier.hpp"
#include "schur/io.hpp"
#include "schur/majorization.hpp"
#include "schur/rule_table.hpp"

namespace schur {
namespace cli {
namespace detail {

using OJson = nlohmann::ordered_json;

inline std::string join(const std::vector<std::string>& parts,
                        const std::string& sep) {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

inline std::string counts_text(const TypeDistribution& x) {
  std::string out;
  for (const Count v : x.counts) {
    if (!out.empty()) out += ",";
    out += std::to_string(v);
  }
  return out;
}

class TsvWriter {
 public:
  void row(std::initializer_list<std::string> cells) {
    rows_.push_back({cells.begin(), cells.end()});
  }
  void write(std::ostream& out) const {
    for (const auto& cells : rows_) {
      out << join(cells, "\t") << "\n";
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

inline void emit(const RunConfig& config, const OJson& json,
                 const TsvWriter& tsv, std::ostream& out) {
  if (config.format == RunConfig::Format::kJson) {
    out << json.dump(2) << "\n";
  } else {
    tsv.write(out);
  }
}

inline OJson axiom_check_json(const AxiomCheck& check) {
  OJson j;
  j["pass"] = check.pass;
  if (!check.pass) {
    j["subset"] = check.subset;
    if (!check.kept.empty()) j["kept"] = check.kept;
    if (!check.rejected.empty()) j["rejected"] = check.rejected;
    j["detail"] = check.detail;
  }
  return j;
}

inline void apply_env_caps(RunConfig& config) {
  const auto read = [](const char* name) -> std::optional<long long> {
    const char* raw = std::getenv(name);
    if (raw == nullptr) return std::nullopt;
    const long long value =
        schur::detail::parse_integer(raw, std::string(name));
    if (value < 1) {
      throw InputError(std::string(name) + " must be a positive integer");
    }
    return value;
  };
  if (const auto v = read("SCHUR_CAP_BUDGET")) {
    config.caps.budget_enumeration = *v;
  }
  if (const auto v = read("SCHUR_CAP_FRONTIER")) {
    config.caps.frontier_cardinality = *v;
  }
  if (const auto v = read("SCHUR_CAP_SUBSETS")) {
    config.caps.subset_enumeration = *v;
  }
  if (const auto v = read("SCHUR_CAP_LATTICE")) {
    config.caps.lattice_enumeration = *v;
  }
  if (const auto v = read("SCHUR_CAP_UNIVERSE")) {
    config.caps.universe_size = static_cast<int>(*v);
  }
}

inline int run_admit(const RunConfig& config, const Roster& roster,
                     std::ostream& out) {
  const ChoiceTrace trace =
      schur_choice_trace(roster.students, roster.ranking, config.bias,
                         config.capacity, config.caps);
  const std::vector<std::string> admitted = schur::detail::ids_of(trace.admitted);
  const TypeDistribution distribution =
      xi(trace.admitted, static_cast<std::size_t>(config.n));

  OJson j;
  j["command"] = "admit";
  j["capacity"] = config.capacity;
  j["tie_break_applied"] = roster.tie_break_applied;
  j["admitted"] = admitted;
  j["distribution"] = distribution_to_json(distribution);
  j["target_total"] = trace.target.target_total;
  j["frontier"] = OJson::array();
  for (const TypeDistribution& y : trace.target.elements) {
    j["frontier"].push_back(distribution_to_json(y));
  }
  j["trace"] = OJson::array();
  TsvWriter tsv;
  tsv.row({"command", "admit"});
  tsv.row({"capacity", std::to_string(config.capacity)});
  tsv.row({"tie_break_applied", roster.tie_break_applied ? "true" : "false"});
  tsv.row({"admitted", join(admitted, ",")});
  tsv.row({"distribution", counts_text(distribution)});
  tsv.row({"target_total", std::to_string(trace.target.target_total)});
  for (const TypeDistribution& y : trace.target.elements) {
    tsv.row({"frontier", counts_text(y)});
  }
  for (const ChoiceStep& step : trace.steps) {
    OJson s;
    s["student"] = step.student.id;
    s["type"] = step.student.type_index;
    s["admitted"] = step.admitted;
    s["running"] = distribution_to_json(step.running);
    j["trace"].push_back(s);
    tsv.row({"step", step.student.id, std::to_string(step.student.type_index),
             step.admitted ? "admit" : "skip", counts_text(step.running)});
  }
  emit(config, j, tsv, out);
  return 0;
}

inline int run_frontier(const RunConfig& config, const TypeDistribution& pool,
                        std::ostream& out) {
  const BudgetSpec spec{pool, config.capacity};
  const FrontierSet f = frontier(spec, config.bias, config.caps);

  OJson j;
  j["command"] = "frontier";
  j["pool"] = distribution_to_json(pool);
  j["capacity"] = config.capacity;
  j["target_total"] = f.target_total;
  j["frontier"] = OJson::array();
  for (const TypeDistribution& y : f.elements) {
    j["frontier"].push_back(distribution_to_json(y));
  }
  TsvWriter tsv;
  tsv.row({"command", "frontier"});
  tsv.row({"pool", counts_text(pool)});
  tsv.row({"capacity", std::to_string(config.capacity)});
  tsv.row({"target_total", std::to_string(f.target_total)});
  for (const TypeDistribution& y : f.elements) {
    tsv.row({"frontier", counts_text(y)});
  }
  if (f.elements.size() >= 2) {
    const FrontierDiagnostics diag = frontier_diagnostics(f, config.bias);
    j["shared_value"] = to_string(diag.shared_value);
    tsv.row({"shared_value", to_string(diag.shared_value)});
  }
  emit(config, j, tsv, out);
  return 0;
}

inline int run_audit(const RunConfig& config, const Roster& roster,
                     const RuleTable& table, std::ostream& out) {
  const AuditReport report =
      audit(table, roster.students, config.bias, config.caps);
  const bool pass = report.nonwasteful.pass &&
                    report.promotes_diversity.pass &&
                    report.frontier_condition.pass && report.srp.pass;

  OJson j;
  j["command"] = "audit";
  j["capacity"] = table.capacity;
  j["partial_domain"] = report.partial_domain;
  j["pass"] = pass;
  j["nonwasteful"] = axiom_check_json(report.nonwasteful);
  j["promotes_diversity"] = axiom_check_json(report.promotes_diversity);
  j["frontier_condition"] = axiom_check_json(report.frontier_condition);
  j["srp"]["pass"] = report.srp.pass;
  if (!report.srp.pass) {
    j["srp"]["cycle"]["students"] = report.srp.cycle.students;
    j["srp"]["cycle"]["subsets"] = report.srp.cycle.subsets;
  }
  if (report.recovered_ranking.has_value()) {
    j["recovered_ranking"] = report.recovered_ranking->order;
    j["reproduces_table"] = report.reproduces_table;
  } else {
    j["recovered_ranking"] = nullptr;
    j["reproduces_table"] = false;
  }

  TsvWriter tsv;
  tsv.row({"command", "audit"});
  tsv.row({"capacity", std::to_string(table.capacity)});
  tsv.row({"partial_domain", report.partial_domain ? "true" : "false"});
  tsv.row({"pass", pass ? "true" : "false"});
  const auto check_row = [&tsv](const std::string& name,
                                const AxiomCheck& check) {
    if (check.pass) {
      tsv.row({name, "pass"});
    } else {
      tsv.row({name, "fail", join(check.subset, ","), check.detail});
    }
  };
  check_row("nonwasteful", report.nonwasteful);
  check_row("promotes_diversity", report.promotes_diversity);
  check_row("frontier_condition", report.frontier_condition);
  if (report.srp.pass) {
    tsv.row({"srp", "pass"});
  } else {
    tsv.row({"srp", "fail", join(report.srp.cycle.students, ",")});
  }
  if (report.recovered_ranking.has_value()) {
    tsv.row({"recovered_ranking", join(report.recovered_ranking->order, ",")});
    tsv.row({"reproduces_table", report.reproduces_table ? "true" : "false"});
  }
  emit(config, j, tsv, out);
  return 0;
}

inline int run_compare(const RunConfig& config, const Roster& roster,
                       const RuleTable& a, const RuleTable& b,
                       std::ostream& out) {
  if (a.capacity != config.capacity || b.capacity != config.capacity) {
    throw InputError("rule table capacities (" + std::to_string(a.capacity) +
                     ", " + std::to_string(b.capacity) +
                     ") must match config capacity " +
                     std::to_string(config.capacity));
  }
  std::map<std::string, Student> by_id;
  for (const Student& s : roster.students) by_id.emplace(s.id, s);
  const auto students_of = [&by_id](const std::vector<std::string>& ids) {
    std::vector<Student> out;
    for (const std::string& id : ids) {
      const auto it = by_id.find(id);
      if (it == by_id.end()) {
        throw InputError("rule table references student \"" + id +
                         "\" missing from the roster");
      }
      out.push_back(it->second);
    }
    return out;
  };

  OJson j;
  j["command"] = "compare";
  j["capacity"] = config.capacity;
  j["verdicts"] = OJson::array();
  TsvWriter tsv;
  tsv.row({"command", "compare"});
  tsv.row({"capacity", std::to_string(config.capacity)});
  std::size_t common = 0, identical = 0, violations = 0;
  for (const auto& [subset, chosen_a] : a.entries) {
    const auto it = b.entries.find(subset);
    if (it == b.entries.end()) continue;
    ++common;
    OJson v;
    v["applicants"] = subset;
    v["a_chosen"] = chosen_a;
    v["b_chosen"] = it->second;
    if (chosen_a == it->second) {
      ++identical;
      v["verdict"] = "identical";
      v["holding"] = OJson::array();
      tsv.row({"verdict", join(subset, ","), "identical", ""});
    } else {
      MeritVerdict verdict;
      try {
        verdict = merit_trichotomy(students_of(chosen_a),
                                   students_of(it->second),
                                   students_of(subset), roster.ranking,
                                   config.bias, config.capacity);
      } catch (const InputError& e) {
        throw InputError("subset {" + join(subset, ",") + "}: " + e.what());
      }
      if (verdict.first == MeritOutcome::kViolation) ++violations;
      v["verdict"] = to_string(verdict.first);
      v["holding"] = OJson::array();
      std::vector<std::string> holding_text;
      for (const MeritOutcome outcome : verdict.holding) {
        v["holding"].push_back(to_string(outcome));
        holding_text.push_back(to_string(outcome));
      }
      tsv.row({"verdict", join(subset, ","), to_string(verdict.first),
               join(holding_text, "|")});
    }
    j["verdicts"].push_back(v);
  }
  j["common_subsets"] = common;
  j["identical"] = identical;
  j["violations"] = violations;
  tsv.row({"common_subsets", std::to_string(common)});
  tsv.row({"identical", std::to_string(identical)});
  tsv.row({"violations", std::to_string(violations)});
  emit(config, j, tsv, out);
  return 0;
}

inline int run_indexes(const RunConfig& config, const TypeDistribution& x,
                       std::ostream& out) {
  const std::vector<DiversityIndex> indexes = {
      gini_simpson(), shannon(), renyi(config.renyi_alpha)};
  OJson j;
  j["command"] = "indexes";
  j["distribution"] = distribution_to_json(x);
  j["values"] = OJson::array();
  TsvWriter tsv;
  tsv.row({"command", "indexes"});
  tsv.row({"distribution", counts_text(x)});
  for (const DiversityIndex& f : indexes) {
    const IndexValue value = f.evaluate(x);
    OJson v;
    v["index"] = f.name;
    v["exact"] = value.exact_string();
    v["approx"] = value.approx_string();
    j["values"].push_back(v);
    tsv.row({"value", f.name, value.exact_string(), value.approx_string()});
  }
  emit(config, j, tsv, out);
  return 0;
}

inline void emit_error(std::ostream& err, const std::string& code,
                       const std::string& message) {
  OJson j;
  j["error"]["code"] = code;
  j["error"]["message"] = message;
  err << j.dump(2) << "\n";
}

}  // namespace detail

/// Command-line entry point, stream-parameterized so tests can drive it.
/// Commands: admit, frontier, audit, compare, indexes. Errors print a JSON
/// object with an error code field to err and return nonzero.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"b-targeting Schur choice rules over type distributions"};
  app.require_subcommand(1);
  std::string config_path, roster_path, dist_text, format_flag;
  std::vector<std::string> rule_paths;

  const auto add_config = [&config_path](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "run configuration JSON")
        ->required();
  };
  const auto add_format = [&format_flag](CLI::App* cmd) {
    cmd->add_option("--format", format_flag, "output format: json or tsv");
  };

  CLI::App* admit = app.add_subcommand("admit", "run the choice rule");
  add_config(admit);
  admit->add_option("--roster", roster_path, "roster CSV")->required();
  add_format(admit);

  CLI::App* frontier_cmd =
      app.add_subcommand("frontier", "diversity frontier of a pool");
  add_config(frontier_cmd);
  frontier_cmd->add_option("--dist", dist_text, "pool distribution")
      ->required();
  add_format(frontier_cmd);

  CLI::App* audit_cmd =
      app.add_subcommand("audit", "axiom audit of a rule table");
  add_config(audit_cmd);
  audit_cmd->add_option("--roster", roster_path, "roster CSV")->required();
  audit_cmd->add_option("--rule", rule_paths, "rule table JSON")
      ->required()
      ->expected(1);
  add_format(audit_cmd);

  CLI::App* compare_cmd =
      app.add_subcommand("compare", "merit comparison of two rule tables");
  add_config(compare_cmd);
  compare_cmd->add_option("--roster", roster_path, "roster CSV")->required();
  compare_cmd
      ->add_option("--rule", rule_paths, "two rule table JSON files")
      ->required()
      ->expected(2);
  add_format(compare_cmd);

  CLI::App* indexes_cmd =
      app.add_subcommand("indexes", "diversity index values");
  add_config(indexes_cmd);
  indexes_cmd->add_option("--dist", dist_text, "distribution")->required();
  add_format(indexes_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    detail::emit_error(err, "input", e.what());
    return 2;
  }

  try {
    RunConfig config = load_run_config(config_path);
    detail::apply_env_caps(config);
    if (!format_flag.empty()) config.format = parse_format(format_flag);

    if (admit->parsed()) {
      return detail::run_admit(config, load_roster(roster_path, config), out);
    }
    if (frontier_cmd->parsed()) {
      const TypeDistribution pool = parse_distribution(dist_text);
      if (pool.dim() != static_cast<std::size_t>(config.n)) {
        throw InputError("distribution has " + std::to_string(pool.dim()) +
                         " types but config n is " + std::to_string(config.n));
      }
      return detail::run_frontier(config, pool, out);
    }
    if (audit_cmd->parsed()) {
      return detail::run_audit(config, load_roster(roster_path, config),
                               load_rule_table(rule_paths[0]), out);
    }
    if (compare_cmd->parsed()) {
      return detail::run_compare(config, load_roster(roster_path, config),
                                 load_rule_table(rule_paths[0]),
                                 load_rule_table(rule_paths[1]), out);
    }
    if (indexes_cmd->parsed()) {
      const TypeDistribution x = parse_distribution(dist_text);
      if (x.dim() != static_cast<std::size_t>(config.n)) {
        throw InputError("distribution has " + std::to_string(x.dim()) +
                         " types but config n is " + std::to_string(config.n));
      }
      return detail::run_indexes(config, x, out);
    }
    throw InternalError("no subcommand dispatched");
  } catch (const Error& e) {
    detail::emit_error(err, e.code(), e.what());
    return 1;
  } catch (const std::exception& e) {
    detail::emit_error(err, "internal", e.what());
    return 1;
  }
}

}  // namespace cli
}  // namespace schur

#endif  // SCHUR_CLI_HPP
