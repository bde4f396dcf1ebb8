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

#ifndef SCHUR_CHOICE_HPP
#define SCHUR_CHOICE_HPP

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "schur/caps.hpp"
#include "schur/error.hpp"
#include "schur/frontier.hpp"
#include "schur/majorization.hpp"
#include "schur/students.hpp"
#include "schur/types.hpp"

namespace schur {

struct ChoiceStep {
  Student student;          // considered in priority order
  bool admitted = false;
  TypeDistribution running; // distribution of admits after the decision
};

struct ChoiceTrace {
  std::vector<ChoiceStep> steps;
  std::vector<Student> admitted;  // sorted by id
  FrontierSet target;             // F_b of the full applicant distribution
};

/// Walks applicants from highest to lowest priority, admitting a student
/// exactly when the admitted distribution stays under some element of
/// F_b(xi(S)).
inline ChoiceTrace schur_choice_trace(const std::vector<Student>& applicants,
                                      const PriorityRanking& priority,
                                      const BiasSpec& bias, Count capacity,
                                      const Caps& caps = {}) {
  const std::size_t n = bias.dim();
  const std::vector<Student> canonical =
      detail::canonical_students(applicants, n);

  ChoiceTrace trace;
  trace.target = frontier(BudgetSpec(xi(canonical, n), capacity), bias, caps);
  TypeDistribution running = TypeDistribution::zero(n);
  for (const Student& s : priority.sort_by_priority(canonical)) {
    const TypeDistribution candidate =
        running.plus_unit(static_cast<std::size_t>(s.type_index) - 1);
    ChoiceStep step;
    step.student = s;
    step.admitted = trace.target.any_covers(candidate);
    if (step.admitted) {
      running = candidate;
      trace.admitted.push_back(s);
    }
    step.running = running;
    trace.steps.push_back(std::move(step));
  }
  std::sort(trace.admitted.begin(), trace.admitted.end());
  return trace;
}

inline std::vector<Student> schur_choice(const std::vector<Student>& applicants,
                                         const PriorityRanking& priority,
                                         const BiasSpec& bias, Count capacity,
                                         const Caps& caps = {}) {
  return schur_choice_trace(applicants, priority, bias, capacity, caps)
      .admitted;
}

/// All subsets whose distribution lies on the frontier. Only subsets of size
/// min{q, |S|} can qualify, so enumeration is restricted to that size.
inline std::vector<std::vector<std::string>> matroid_bases(
    const std::vector<Student>& applicants, const BiasSpec& bias,
    Count capacity, const Caps& caps = {}) {
  const std::size_t n = bias.dim();
  const std::vector<Student> canonical =
      detail::canonical_students(applicants, n);
  const FrontierSet target =
      frontier(BudgetSpec(xi(canonical, n), capacity), bias, caps);
  const std::size_t m = static_cast<std::size_t>(target.target_total);

  Int subsets = 1;
  for (std::size_t i = 0; i < m; ++i) {
    subsets = subsets * static_cast<int>(canonical.size() - i) /
              static_cast<int>(i + 1);
  }
  if (subsets > caps.subset_enumeration) {
    throw ResourceError("base enumeration needs " + subsets.str() +
                        " subsets, cap is " +
                        std::to_string(caps.subset_enumeration));
  }

  std::vector<std::vector<std::string>> bases;
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (pick.size() == m) {
      std::vector<Student> subset;
      subset.reserve(m);
      for (std::size_t i : pick) subset.push_back(canonical[i]);
      if (target.contains(xi(subset, n))) {
        bases.push_back(detail::ids_of(subset));
      }
      return;
    }
    for (std::size_t i = from;
         canonical.size() - i >= m - pick.size() && i < canonical.size(); ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return bases;  // lexicographic by construction over id-sorted students
}

/// Greedy rule over the base family: admit a student exactly when the
/// admitted set plus that student still extends to some base.
inline std::vector<Student> greedy_choice(const std::vector<Student>& applicants,
                                          const PriorityRanking& priority,
                                          const BiasSpec& bias, Count capacity,
                                          const Caps& caps = {}) {
  const std::size_t n = bias.dim();
  const std::vector<Student> canonical =
      detail::canonical_students(applicants, n);
  std::vector<std::set<std::string>> bases;
  for (std::vector<std::string>& ids : matroid_bases(canonical, bias, capacity, caps)) {
    bases.emplace_back(ids.begin(), ids.end());
  }

  std::set<std::string> admitted_ids;
  std::vector<Student> admitted;
  for (const Student& s : priority.sort_by_priority(canonical)) {
    const bool extends = std::any_of(
        bases.begin(), bases.end(), [&](const std::set<std::string>& base) {
          if (base.count(s.id) == 0) return false;
          return std::includes(base.begin(), base.end(), admitted_ids.begin(),
                               admitted_ids.end());
        });
    if (extends) {
      admitted_ids.insert(s.id);
      admitted.push_back(s);
    }
  }
  std::sort(admitted.begin(), admitted.end());
  return admitted;
}

/// A P-priority dominates B: at least as many students, and rank for rank at
/// least as high a priority.
inline bool priority_dominates(const std::vector<Student>& a,
                               const std::vector<Student>& b,
                               const PriorityRanking& priority) {
  std::vector<std::size_t> ra, rb;
  for (const Student& s : a) ra.push_back(priority.rank_of(s.id));
  for (const Student& s : b) rb.push_back(priority.rank_of(s.id));
  std::sort(ra.begin(), ra.end());
  std::sort(rb.begin(), rb.end());
  if (ra == rb) {
    throw InputError("priority dominance compares distinct sets");
  }
  if (ra.size() < rb.size()) return false;
  for (std::size_t k = 0; k < rb.size(); ++k) {
    if (ra[k] > rb[k]) return false;
  }
  return true;
}

enum class MeritOutcome {
  kMoreStudents,
  kStrictlyMoreDiverse,
  kPriorityDominates,
  kViolation,
};

inline std::string to_string(MeritOutcome outcome) {
  switch (outcome) {
    case MeritOutcome::kMoreStudents: return "more-students";
    case MeritOutcome::kStrictlyMoreDiverse: return "strictly-more-diverse";
    case MeritOutcome::kPriorityDominates: return "priority-dominates";
    case MeritOutcome::kViolation: return "VIOLATION";
  }
  return "VIOLATION";
}

struct MeritVerdict {
  MeritOutcome first = MeritOutcome::kViolation;
  std::vector<MeritOutcome> holding;  // every clause that holds, in order
};

/// Compares the rule output against an alternative on the same applicants:
/// more students admitted, else a strictly more b-diverse distribution, else
/// priority dominance. A violation means the first output cannot have come
/// from the frontier-targeting rule.
inline MeritVerdict merit_trichotomy(const std::vector<Student>& chosen,
                                     const std::vector<Student>& other,
                                     const std::vector<Student>& applicants,
                                     const PriorityRanking& priority,
                                     const BiasSpec& bias, Count capacity) {
  const std::size_t n = bias.dim();
  const std::vector<Student> canonical =
      detail::canonical_students(applicants, n);
  auto check_subset = [&](const std::vector<Student>& out, const char* name) {
    if (static_cast<Count>(out.size()) > capacity) {
      throw InputError(std::string(name) + " output exceeds capacity");
    }
    for (const Student& s : out) {
      if (!std::binary_search(canonical.begin(), canonical.end(), s)) {
        throw InputError(std::string(name) + " output contains " + s.id +
                         " who is not an applicant");
      }
    }
  };
  check_subset(chosen, "rule");
  check_subset(other, "alternative");
  auto ids = [](std::vector<Student> s) {
    std::sort(s.begin(), s.end());
    return detail::ids_of(s);
  };
  if (ids(chosen) == ids(other)) {
    throw InputError("trichotomy compares distinct outputs");
  }

  MeritVerdict verdict;
  if (chosen.size() > other.size()) {
    verdict.holding.push_back(MeritOutcome::kMoreStudents);
  }
  if (more_b_diverse(xi(chosen, n), xi(other, n), bias) ==
      DiversityOrder::kStrictlyMore) {
    verdict.holding.push_back(MeritOutcome::kStrictlyMoreDiverse);
  }
  if (priority_dominates(chosen, other, priority)) {
    verdict.holding.push_back(MeritOutcome::kPriorityDominates);
  }
  if (!verdict.holding.empty()) verdict.first = verdict.holding.front();
  return verdict;
}

/// Reserve-and-open baseline: each type owns a reserved block filled by
/// priority, the remainder is open by priority. An adversary rule for
/// comparisons, not a frontier construction.
inline std::vector<Student> reserves_choice(
    const std::vector<Student>& applicants, const PriorityRanking& priority,
    const std::vector<Count>& reserves, Count capacity) {
  if (capacity < 1) throw InputError("capacity must be a positive integer");
  Count reserved_total = 0;
  for (Count r : reserves) {
    if (r < 0) throw InputError("reserve counts must be nonnegative");
    reserved_total += r;
  }
  if (reserved_total > capacity) {
    throw InputError("reserved seats exceed capacity");
  }
  const std::vector<Student> canonical =
      detail::canonical_students(applicants, reserves.size());

  std::vector<Count> open_quota = reserves;
  std::set<std::string> admitted_ids;
  std::vector<Student> admitted;
  for (const Student& s : priority.sort_by_priority(canonical)) {
    Count& quota = open_quota[static_cast<std::size_t>(s.type_index) - 1];
    if (quota > 0) {
      quota -= 1;
      admitted_ids.insert(s.id);
      admitted.push_back(s);
    }
  }
  Count open_seats = capacity - static_cast<Count>(admitted.size());
  for (const Student& s : priority.sort_by_priority(canonical)) {
    if (open_seats == 0) break;
    if (admitted_ids.count(s.id)) continue;
    admitted.push_back(s);
    open_seats -= 1;
  }
  std::sort(admitted.begin(), admitted.end());
  return admitted;
}

}  // namespace schur

#endif  // SCHUR_CHOICE_HPP
