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

#ifndef SCHUR_STUDENTS_HPP
#define SCHUR_STUDENTS_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "schur/error.hpp"
#include "schur/types.hpp"

namespace schur {

/// A student with a unique id and a 1-based type index.
struct Student {
  std::string id;
  int type_index = 1;

  friend bool operator==(const Student& a, const Student& b) {
    return a.id == b.id && a.type_index == b.type_index;
  }
  friend bool operator<(const Student& a, const Student& b) {
    return a.id < b.id;
  }
};

/// Type distribution of a student set: coordinate i counts type i+1.
inline TypeDistribution xi(const std::vector<Student>& students,
                           std::size_t n) {
  if (n == 0) throw InputError("need at least one type");
  std::vector<Count> counts(n, 0);
  for (const Student& s : students) {
    if (s.type_index < 1 || static_cast<std::size_t>(s.type_index) > n) {
      throw InputError("student " + s.id + " has type " +
                       std::to_string(s.type_index) + " outside 1.." +
                       std::to_string(n));
    }
    counts[static_cast<std::size_t>(s.type_index) - 1] += 1;
  }
  return TypeDistribution(std::move(counts));
}

/// Strict priority order over student ids, highest priority first.
struct PriorityRanking {
  std::vector<std::string> order;

  PriorityRanking() = default;
  explicit PriorityRanking(std::vector<std::string> ids)
      : order(std::move(ids)) {
    std::map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (!seen.emplace(order[i], i).second) {
        throw InputError("priority ranking repeats student " + order[i]);
      }
    }
    ranks_ = std::move(seen);
  }

  std::size_t rank_of(const std::string& id) const {
    const auto it = ranks_.find(id);
    if (it == ranks_.end()) {
      throw InputError("priority ranking does not cover student " + id);
    }
    return it->second;
  }

  bool covers(const std::string& id) const { return ranks_.count(id) > 0; }

  /// Students sorted from highest to lowest priority; throws if any student
  /// is missing from the ranking.
  std::vector<Student> sort_by_priority(std::vector<Student> students) const {
    std::vector<std::pair<std::size_t, Student>> keyed;
    keyed.reserve(students.size());
    for (Student& s : students) keyed.emplace_back(rank_of(s.id), std::move(s));
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Student> out;
    out.reserve(keyed.size());
    for (auto& [rank, s] : keyed) out.push_back(std::move(s));
    return out;
  }

 private:
  std::map<std::string, std::size_t> ranks_;
};

namespace detail {

/// Validates unique ids and in-range types; returns students sorted by id.
inline std::vector<Student> canonical_students(std::vector<Student> students,
                                               std::size_t n) {
  std::sort(students.begin(), students.end());
  for (std::size_t i = 0; i + 1 < students.size(); ++i) {
    if (students[i].id == students[i + 1].id) {
      throw InputError("duplicate student id " + students[i].id);
    }
  }
  xi(students, n);  // type range check
  return students;
}

inline std::vector<std::string> ids_of(const std::vector<Student>& students) {
  std::vector<std::string> ids;
  ids.reserve(students.size());
  for (const Student& s : students) ids.push_back(s.id);
  return ids;
}

}  // namespace detail

}  // namespace schur

#endif  // SCHUR_STUDENTS_HPP
