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

#ifndef SCHUR_RULE_TABLE_HPP
#define SCHUR_RULE_TABLE_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "schur/caps.hpp"
#include "schur/choice.hpp"
#include "schur/error.hpp"
#include "schur/students.hpp"

namespace schur {

namespace detail {

inline std::vector<std::string> canonical_ids(std::vector<std::string> ids) {
  std::sort(ids.begin(), ids.end());
  for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
    if (ids[i] == ids[i + 1]) {
      throw InputError("duplicate student id " + ids[i] + " in a subset");
    }
  }
  return ids;
}

inline std::string join_ids(const std::vector<std::string>& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ",";
    out += ids[i];
  }
  return out + "}";
}

}  // namespace detail

/// A tabulated choice rule: applicant subsets (canonical ascending id lists)
/// mapped to chosen subsets. May cover only part of the power set.
struct RuleTable {
  Count capacity = 1;
  std::map<std::vector<std::string>, std::vector<std::string>> entries;

  RuleTable() = default;
  explicit RuleTable(Count q) : capacity(q) {
    if (q < 1) throw InputError("capacity must be a positive integer");
  }

  void add(std::vector<std::string> applicants,
           std::vector<std::string> chosen) {
    applicants = detail::canonical_ids(std::move(applicants));
    chosen = detail::canonical_ids(std::move(chosen));
    if (!std::includes(applicants.begin(), applicants.end(), chosen.begin(),
                       chosen.end())) {
      throw InputError("chosen set is not a subset of the applicants " +
                       detail::join_ids(applicants));
    }
    if (static_cast<Count>(chosen.size()) > capacity) {
      throw InputError("chosen set for " + detail::join_ids(applicants) +
                       " exceeds capacity");
    }
    if (!entries.emplace(std::move(applicants), std::move(chosen)).second) {
      throw InputError("duplicate rule table entry");
    }
  }

  const std::vector<std::string>& chosen_for(
      std::vector<std::string> applicants) const {
    applicants = detail::canonical_ids(std::move(applicants));
    const auto it = entries.find(applicants);
    if (it == entries.end()) {
      throw InputError("rule table has no entry for " +
                       detail::join_ids(applicants));
    }
    return it->second;
  }
};

/// Tabulates the frontier-targeting rule over every subset of the universe.
inline RuleTable make_schur_table(const std::vector<Student>& universe,
                                  const PriorityRanking& priority,
                                  const BiasSpec& bias, Count capacity,
                                  const Caps& caps = {}) {
  const std::vector<Student> canonical =
      detail::canonical_students(universe, bias.dim());
  if (static_cast<int>(canonical.size()) > caps.universe_size) {
    throw ResourceError("universe of " + std::to_string(canonical.size()) +
                        " students exceeds the audit cap of " +
                        std::to_string(caps.universe_size));
  }
  RuleTable table(capacity);
  const std::size_t k = canonical.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<Student> subset;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::size_t{1} << i)) subset.push_back(canonical[i]);
    }
    table.add(detail::ids_of(subset),
              detail::ids_of(
                  schur_choice(subset, priority, bias, capacity, caps)));
  }
  return table;
}

}  // namespace schur

#endif  // SCHUR_RULE_TABLE_HPP
