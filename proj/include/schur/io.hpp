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

#ifndef SCHUR_IO_HPP
#define SCHUR_IO_HPP

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "schur/caps.hpp"
#include "schur/error.hpp"
#include "schur/majorization.hpp"
#include "schur/rational.hpp"
#include "schur/rule_table.hpp"
#include "schur/students.hpp"
#include "schur/types.hpp"

namespace schur {

struct RunConfig {
  enum class TieBreak { kReject, kById };
  enum class Format { kJson, kTsv };

  int n = 0;
  Count capacity = 0;
  std::vector<Rat> ideal_ratio;
  BiasSpec bias;
  TieBreak tie_break = TieBreak::kReject;
  Format format = Format::kJson;
  Rat renyi_alpha = Rat(2);
  Caps caps;
};

namespace detail {

inline std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

inline std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) fields.push_back(field);
  if (!line.empty() && line.back() == sep) fields.push_back("");
  return fields;
}

inline long long parse_integer(const std::string& text,
                               const std::string& what) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw InputError(what + " must be an integer, got \"" + text + "\"");
  }
  if (used != text.size()) {
    throw InputError(what + " must be an integer, got \"" + text + "\"");
  }
  return value;
}

inline void reject_unknown_keys(const nlohmann::json& object,
                                const std::set<std::string>& allowed,
                                const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    if (allowed.count(key) == 0) {
      throw InputError("unknown key \"" + key + "\" in " + where);
    }
  }
}

}  // namespace detail

inline RunConfig::Format parse_format(const std::string& text) {
  if (text == "json") return RunConfig::Format::kJson;
  if (text == "tsv") return RunConfig::Format::kTsv;
  throw InputError("format must be json or tsv, got \"" + text + "\"");
}

/// Configuration JSON. Required: n, capacity, ideal_ratio (rationals as
/// strings). Optional: tie_break_policy (reject | by-id), format
/// (json | tsv), renyi_alpha (rational string), caps (object).
inline RunConfig parse_run_config(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("config parse error: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("config must be a JSON object");
  detail::reject_unknown_keys(doc,
                              {"n", "capacity", "ideal_ratio",
                               "tie_break_policy", "format", "renyi_alpha",
                               "caps"},
                              "config");
  RunConfig config;
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw InputError("config requires an integer field n");
  }
  config.n = doc["n"].get<int>();
  if (config.n < 1) throw InputError("config field n must be at least 1");
  if (!doc.contains("capacity") || !doc["capacity"].is_number_integer()) {
    throw InputError("config requires an integer field capacity");
  }
  config.capacity = doc["capacity"].get<Count>();
  if (config.capacity < 1) {
    throw InputError("config field capacity must be at least 1");
  }
  if (!doc.contains("ideal_ratio") || !doc["ideal_ratio"].is_array()) {
    throw InputError("config requires an array field ideal_ratio");
  }
  for (const auto& entry : doc["ideal_ratio"]) {
    if (!entry.is_string()) {
      throw InputError("ideal_ratio entries must be rational strings");
    }
    config.ideal_ratio.push_back(parse_rational(entry.get<std::string>()));
  }
  if (config.ideal_ratio.size() != static_cast<std::size_t>(config.n)) {
    throw InputError("ideal_ratio has " +
                     std::to_string(config.ideal_ratio.size()) +
                     " entries but n is " + std::to_string(config.n));
  }
  config.bias = derive_bias(config.ideal_ratio);
  if (doc.contains("tie_break_policy")) {
    const std::string policy = doc["tie_break_policy"].get<std::string>();
    if (policy == "reject") {
      config.tie_break = RunConfig::TieBreak::kReject;
    } else if (policy == "by-id") {
      config.tie_break = RunConfig::TieBreak::kById;
    } else {
      throw InputError("tie_break_policy must be reject or by-id, got \"" +
                       policy + "\"");
    }
  }
  if (doc.contains("format")) {
    config.format = parse_format(doc["format"].get<std::string>());
  }
  if (doc.contains("renyi_alpha")) {
    config.renyi_alpha = parse_rational(doc["renyi_alpha"].get<std::string>());
    if (config.renyi_alpha <= 0 || config.renyi_alpha == 1) {
      throw InputError("renyi_alpha must be positive and not 1, got " +
                       to_string(config.renyi_alpha));
    }
  }
  if (doc.contains("caps")) {
    const nlohmann::json& caps = doc["caps"];
    if (!caps.is_object()) throw InputError("config field caps must be an object");
    detail::reject_unknown_keys(caps,
                                {"budget_enumeration", "frontier_cardinality",
                                 "subset_enumeration", "lattice_enumeration",
                                 "universe_size"},
                                "config caps");
    const auto read = [&caps](const char* key, auto& field) {
      if (!caps.contains(key)) return;
      if (!caps[key].is_number_integer() || caps[key].get<long long>() < 1) {
        throw InputError(std::string("cap ") + key +
                         " must be a positive integer");
      }
      field = caps[key].get<std::decay_t<decltype(field)>>();
    };
    read("budget_enumeration", config.caps.budget_enumeration);
    read("frontier_cardinality", config.caps.frontier_cardinality);
    read("subset_enumeration", config.caps.subset_enumeration);
    read("lattice_enumeration", config.caps.lattice_enumeration);
    read("universe_size", config.caps.universe_size);
  }
  return config;
}

inline RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file " + path);
  return parse_run_config(in);
}

struct Roster {
  std::vector<Student> students;  // id ascending
  PriorityRanking ranking;        // score descending
  bool tie_break_applied = false;
};

/// CSV with header student_id,type,priority_score. Types are 1-based and
/// must lie in 1..n; scores are rational strings ordered descending. Equal
/// scores are an error under the reject policy and break ascending by id
/// under by-id, flagging the roster.
inline Roster parse_roster(std::istream& in, const RunConfig& config) {
  static const std::string kHeader = "student_id,type,priority_score";
  std::string line;
  if (!std::getline(in, line) || detail::strip_cr(line) != kHeader) {
    throw InputError("roster line 1: header must be " + kHeader);
  }
  struct Row {
    std::string id;
    int type = 0;
    Rat score;
  };
  std::vector<Row> rows;
  std::set<std::string> seen;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    line = detail::strip_cr(line);
    if (line.empty()) continue;
    const std::string where = "roster line " + std::to_string(lineno);
    const std::vector<std::string> fields = detail::split(line, ',');
    if (fields.size() != 3) {
      throw InputError(where + ": expected 3 fields, got " +
                       std::to_string(fields.size()));
    }
    Row row;
    row.id = fields[0];
    if (row.id.empty()) throw InputError(where + ": empty student id");
    if (!seen.insert(row.id).second) {
      throw InputError(where + ": duplicate student id \"" + row.id + "\"");
    }
    const long long type = detail::parse_integer(fields[1], where + ": type");
    if (type < 1 || type > config.n) {
      throw InputError(where + ": type " + std::to_string(type) +
                       " outside 1.." + std::to_string(config.n));
    }
    row.type = static_cast<int>(type);
    try {
      row.score = parse_rational(fields[2]);
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
    rows.push_back(row);
  }

  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.id < b.id;
  });
  Roster roster;
  std::vector<std::string> order;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0 && rows[i].score == rows[i - 1].score) {
      if (config.tie_break == RunConfig::TieBreak::kReject) {
        throw InputError("priority tie between \"" + rows[i - 1].id +
                         "\" and \"" + rows[i].id +
                         "\"; tie_break_policy is reject");
      }
      roster.tie_break_applied = true;
    }
    order.push_back(rows[i].id);
    roster.students.push_back(Student{rows[i].id, rows[i].type});
  }
  roster.ranking = PriorityRanking(order);
  std::sort(roster.students.begin(), roster.students.end());
  return roster;
}

inline Roster load_roster(const std::string& path, const RunConfig& config) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open roster file " + path);
  return parse_roster(in, config);
}

/// Comma-separated counts, optionally wrapped in parentheses: "1,4,1".
inline TypeDistribution parse_distribution(const std::string& text) {
  std::string body = text;
  body.erase(std::remove_if(body.begin(), body.end(),
                            [](char c) { return c == ' ' || c == '\t'; }),
             body.end());
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
    body = body.substr(1, body.size() - 2);
  }
  if (body.empty()) throw InputError("distribution is empty");
  std::vector<Count> counts;
  for (const std::string& field : detail::split(body, ',')) {
    const long long v = detail::parse_integer(field, "distribution entry");
    if (v < 0) {
      throw InputError("distribution entries must be nonnegative, got " +
                       field);
    }
    counts.push_back(v);
  }
  return TypeDistribution{counts};
}

/// Rule table JSON: {"capacity": q, "entries": [{"applicants": [ids],
/// "chosen": [ids]}, ...]}.
inline RuleTable parse_rule_table(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("rule table parse error: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("rule table must be a JSON object");
  detail::reject_unknown_keys(doc, {"capacity", "entries"}, "rule table");
  if (!doc.contains("capacity") || !doc["capacity"].is_number_integer()) {
    throw InputError("rule table requires an integer field capacity");
  }
  RuleTable table(doc["capacity"].get<Count>());
  if (!doc.contains("entries") || !doc["entries"].is_array()) {
    throw InputError("rule table requires an array field entries");
  }
  std::size_t index = 0;
  for (const auto& entry : doc["entries"]) {
    const std::string where = "rule table entry " + std::to_string(index);
    if (!entry.is_object()) throw InputError(where + ": must be an object");
    detail::reject_unknown_keys(entry, {"applicants", "chosen"}, where);
    if (!entry.contains("applicants") || !entry["applicants"].is_array() ||
        !entry.contains("chosen") || !entry["chosen"].is_array()) {
      throw InputError(where +
                       ": requires array fields applicants and chosen");
    }
    const auto ids = [&where](const nlohmann::json& array) {
      std::vector<std::string> out;
      for (const auto& v : array) {
        if (!v.is_string()) {
          throw InputError(where + ": student ids must be strings");
        }
        out.push_back(v.get<std::string>());
      }
      return out;
    };
    try {
      table.add(ids(entry["applicants"]), ids(entry["chosen"]));
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
    ++index;
  }
  return table;
}

inline RuleTable load_rule_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open rule table file " + path);
  return parse_rule_table(in);
}

inline nlohmann::ordered_json rule_table_to_json(const RuleTable& table) {
  nlohmann::ordered_json doc;
  doc["capacity"] = table.capacity;
  doc["entries"] = nlohmann::ordered_json::array();
  for (const auto& [applicants, chosen] : table.entries) {
    nlohmann::ordered_json entry;
    entry["applicants"] = applicants;
    entry["chosen"] = chosen;
    doc["entries"].push_back(entry);
  }
  return doc;
}

inline nlohmann::ordered_json distribution_to_json(const TypeDistribution& x) {
  return nlohmann::ordered_json(x.counts);
}

}  // namespace schur

#endif  // SCHUR_IO_HPP
