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

#ifndef SCHUR_AUDIT_HPP
#define SCHUR_AUDIT_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "schur/caps.hpp"
#include "schur/choice.hpp"
#include "schur/error.hpp"
#include "schur/frontier.hpp"
#include "schur/majorization.hpp"
#include "schur/rule_table.hpp"
#include "schur/students.hpp"
#include "schur/types.hpp"

namespace schur {

/// One axiom verdict; failures carry a replayable counterexample.
struct AxiomCheck {
  bool pass = true;
  std::vector<std::string> subset;  // violating S, canonical order
  std::string kept;                 // s in C(S), when the axiom swaps
  std::string rejected;             // s' in S \ C(S)
  std::string detail;
};

/// Edges (s, s') revealed by the table: admitting s over s' although the
/// swap would have been weakly better for diversity. Each edge keeps the
/// first certifying subset in canonical order.
struct RevealedRelation {
  std::set<std::pair<std::string, std::string>> edges;
  std::map<std::pair<std::string, std::string>, std::vector<std::string>>
      witnesses;
};

/// A revealed-preference cycle: student k is revealed over student k+1 by
/// subset k, wrapping around at the end.
struct CycleWitness {
  std::vector<std::string> students;
  std::vector<std::vector<std::string>> subsets;
};

struct SrpCheck {
  bool pass = true;
  CycleWitness cycle;
};

struct AuditReport {
  bool partial_domain = false;
  AxiomCheck nonwasteful;
  AxiomCheck promotes_diversity;
  AxiomCheck frontier_condition;
  SrpCheck srp;
  std::optional<PriorityRanking> recovered_ranking;
  bool reproduces_table = false;  // schur table under recovered == audited
};

namespace detail {

/// Validates the table against the universe and returns id -> Student.
/// Also reports whether the table covers the full power set.
struct AuditContext {
  std::map<std::string, Student> roster;
  std::vector<Student> universe;  // sorted by id
  bool partial_domain = false;

  std::vector<Student> students_of(const std::vector<std::string>& ids) const {
    std::vector<Student> out;
    out.reserve(ids.size());
    for (const std::string& id : ids) out.push_back(roster.at(id));
    return out;
  }
};

inline AuditContext make_audit_context(const RuleTable& table,
                                       const std::vector<Student>& universe,
                                       std::size_t n, const Caps& caps) {
  AuditContext ctx;
  ctx.universe = canonical_students(universe, n);
  if (static_cast<int>(ctx.universe.size()) > caps.universe_size) {
    throw ResourceError("universe of " + std::to_string(ctx.universe.size()) +
                        " students exceeds the audit cap of " +
                        std::to_string(caps.universe_size));
  }
  for (const Student& s : ctx.universe) ctx.roster.emplace(s.id, s);
  for (const auto& [applicants, chosen] : table.entries) {
    for (const std::string& id : applicants) {
      if (ctx.roster.count(id) == 0) {
        throw InputError("rule table references unknown student " + id);
      }
    }
  }
  const std::size_t full =
      ctx.universe.size() < 63 ? (std::size_t{1} << ctx.universe.size()) : 0;
  ctx.partial_domain = table.entries.size() != full;
  return ctx;
}

/// Frontier of the applicant distribution, memoized across subsets.
class FrontierCache {
 public:
  FrontierCache(const BiasSpec& bias, Count capacity, const Caps& caps)
      : bias_(bias), capacity_(capacity), caps_(caps) {}

  const FrontierSet& of(const TypeDistribution& pool) {
    const auto it = cache_.find(pool);
    if (it != cache_.end()) return it->second;
    return cache_
        .emplace(pool, frontier(BudgetSpec(pool, capacity_), bias_, caps_))
        .first->second;
  }

 private:
  const BiasSpec& bias_;
  Count capacity_;
  const Caps& caps_;
  std::map<TypeDistribution, FrontierSet> cache_;
};

}  // namespace detail

/// Axiom: |C(S)| = min{q, |S|} on every audited subset.
inline AxiomCheck check_nonwasteful(const RuleTable& table,
                                    const std::vector<Student>& universe,
                                    std::size_t n, const Caps& caps = {}) {
  detail::make_audit_context(table, universe, n, caps);
  AxiomCheck check;
  for (const auto& [applicants, chosen] : table.entries) {
    const Count expected = std::min<Count>(
        table.capacity, static_cast<Count>(applicants.size()));
    if (static_cast<Count>(chosen.size()) != expected) {
      check.pass = false;
      check.subset = applicants;
      check.detail = "chose " + std::to_string(chosen.size()) +
                     " students, nonwastefulness requires " +
                     std::to_string(expected);
      return check;
    }
  }
  return check;
}

/// Axiom: no single swap of an admitted student for a rejected one is
/// strictly more b-diverse.
inline AxiomCheck check_promotes_diversity(const RuleTable& table,
                                           const std::vector<Student>& universe,
                                           const BiasSpec& bias, const Caps& caps = {}) {
  const detail::AuditContext ctx =
      detail::make_audit_context(table, universe, bias.dim(), caps);
  AxiomCheck check;
  for (const auto& [applicants, chosen] : table.entries) {
    const TypeDistribution dist = xi(ctx.students_of(chosen), bias.dim());
    for (const std::string& kept : chosen) {
      for (const std::string& rejected : applicants) {
        if (std::binary_search(chosen.begin(), chosen.end(), rejected)) {
          continue;
        }
        TypeDistribution swapped = dist;
        swapped = swapped
                      .minus_unit(static_cast<std::size_t>(
                                      ctx.roster.at(kept).type_index) -
                                  1)
                      .plus_unit(static_cast<std::size_t>(
                                     ctx.roster.at(rejected).type_index) -
                                 1);
        if (more_b_diverse(swapped, dist, bias) ==
            DiversityOrder::kStrictlyMore) {
          check.pass = false;
          check.subset = applicants;
          check.kept = kept;
          check.rejected = rejected;
          check.detail = "swapping " + kept + " for " + rejected +
                         " is strictly more diverse";
          return check;
        }
      }
    }
  }
  return check;
}

/// Lemma-level restatement of the two axioms: the chosen distribution lies on
/// the frontier of the applicant distribution, subset by subset.
inline AxiomCheck check_frontier_condition(const RuleTable& table,
                                           const std::vector<Student>& universe,
                                           const BiasSpec& bias,
                                           const Caps& caps = {}) {
  const detail::AuditContext ctx =
      detail::make_audit_context(table, universe, bias.dim(), caps);
  detail::FrontierCache frontiers(bias, table.capacity, caps);
  AxiomCheck check;
  for (const auto& [applicants, chosen] : table.entries) {
    const TypeDistribution pool = xi(ctx.students_of(applicants), bias.dim());
    const TypeDistribution dist = xi(ctx.students_of(chosen), bias.dim());
    if (!frontiers.of(pool).contains(dist)) {
      check.pass = false;
      check.subset = applicants;
      check.detail = "chosen distribution " + to_string(dist) +
                     " is not on the frontier of " + to_string(pool);
      return check;
    }
  }
  return check;
}

/// Extracts every revealed edge: s admitted, s' rejected, swap weakly more
/// diverse. Witness subsets are the first in canonical order per edge.
inline RevealedRelation reveal_relation(const RuleTable& table,
                                        const std::vector<Student>& universe,
                                        const BiasSpec& bias,
                                        const Caps& caps = {}) {
  const detail::AuditContext ctx =
      detail::make_audit_context(table, universe, bias.dim(), caps);
  RevealedRelation rel;
  for (const auto& [applicants, chosen] : table.entries) {
    const TypeDistribution dist = xi(ctx.students_of(chosen), bias.dim());
    for (const std::string& kept : chosen) {
      for (const std::string& rejected : applicants) {
        if (std::binary_search(chosen.begin(), chosen.end(), rejected)) {
          continue;
        }
        const TypeDistribution swapped =
            dist.minus_unit(static_cast<std::size_t>(
                                ctx.roster.at(kept).type_index) -
                            1)
                .plus_unit(static_cast<std::size_t>(
                               ctx.roster.at(rejected).type_index) -
                           1);
        const DiversityOrder order = more_b_diverse(swapped, dist, bias);
        if (order == DiversityOrder::kStrictlyMore ||
            order == DiversityOrder::kEqual) {
          const auto edge = std::make_pair(kept, rejected);
          if (rel.edges.insert(edge).second) {
            rel.witnesses.emplace(edge, applicants);
          }
        }
      }
    }
  }
  return rel;
}

/// Axiom: the revealed relation has no directed cycle. Failures return a
/// shortest cycle together with its witness subsets.
inline SrpCheck check_srp(const RuleTable& table,
                          const std::vector<Student>& universe,
                          const BiasSpec& bias, const Caps& caps = {}) {
  const RevealedRelation rel = reveal_relation(table, universe, bias, caps);
  std::map<std::string, std::vector<std::string>> adjacency;
  for (const auto& [from, to] : rel.edges) adjacency[from].push_back(to);

  SrpCheck check;
  std::vector<std::string> best;
  for (const auto& [start, outs] : adjacency) {
    // Shortest path back to start via BFS.
    std::map<std::string, std::string> parent;
    std::deque<std::string> queue{start};
    std::set<std::string> seen{start};
    std::optional<std::string> closer;
    while (!queue.empty() && !closer) {
      const std::string u = queue.front();
      queue.pop_front();
      const auto it = adjacency.find(u);
      if (it == adjacency.end()) continue;
      for (const std::string& v : it->second) {
        if (v == start) {
          closer = u;
          break;
        }
        if (seen.insert(v).second) {
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
    if (!closer) continue;
    std::vector<std::string> cycle{*closer};
    while (cycle.back() != start) cycle.push_back(parent.at(cycle.back()));
    std::reverse(cycle.begin(), cycle.end());  // start, ..., closer
    if (best.empty() || cycle.size() < best.size()) best = cycle;
  }
  if (!best.empty()) {
    check.pass = false;
    check.cycle.students = best;
    for (std::size_t k = 0; k < best.size(); ++k) {
      const auto edge = std::make_pair(best[k], best[(k + 1) % best.size()]);
      check.cycle.subsets.push_back(rel.witnesses.at(edge));
    }
  }
  return check;
}

/// Szpilrajn completion: topological order of the revealed edges with ties
/// broken by ascending student id.
inline PriorityRanking complete_ranking(const RevealedRelation& rel,
                                        const std::vector<Student>& universe) {
  std::set<std::string> pending;
  for (const Student& s : universe) pending.insert(s.id);
  for (const auto& [from, to] : rel.edges) {
    if (pending.count(from) == 0 || pending.count(to) == 0) {
      throw InputError("revealed relation references a student outside the "
                       "universe");
    }
  }
  std::map<std::string, std::size_t> indegree;
  std::map<std::string, std::vector<std::string>> adjacency;
  for (const std::string& id : pending) indegree[id] = 0;
  for (const auto& [from, to] : rel.edges) {
    adjacency[from].push_back(to);
    indegree[to] += 1;
  }
  std::vector<std::string> order;
  while (!pending.empty()) {
    std::optional<std::string> next;
    for (const std::string& id : pending) {  // ascending id
      if (indegree[id] == 0) {
        next = id;
        break;
      }
    }
    if (!next) {
      throw PreconditionError(
          "revealed relation is cyclic; no completion exists");
    }
    order.push_back(*next);
    pending.erase(*next);
    for (const std::string& to : adjacency[*next]) indegree[to] -= 1;
  }
  return PriorityRanking(order);
}

/// Full audit: the three axiom checks, the SRP cycle check, and when acyclic
/// the recovered ranking plus the round-trip comparison of the regenerated
/// table against the audited one.
inline AuditReport audit(const RuleTable& table,
                         const std::vector<Student>& universe,
                         const BiasSpec& bias, const Caps& caps = {}) {
  const detail::AuditContext ctx =
      detail::make_audit_context(table, universe, bias.dim(), caps);
  AuditReport report;
  report.partial_domain = ctx.partial_domain;
  report.nonwasteful =
      check_nonwasteful(table, universe, bias.dim(), caps);
  report.promotes_diversity =
      check_promotes_diversity(table, universe, bias, caps);
  report.frontier_condition =
      check_frontier_condition(table, universe, bias, caps);
  report.srp = check_srp(table, universe, bias, caps);
  if (!report.srp.pass) return report;

  const RevealedRelation rel = reveal_relation(table, universe, bias, caps);
  report.recovered_ranking = complete_ranking(rel, ctx.universe);
  report.reproduces_table = true;
  for (const auto& [applicants, chosen] : table.entries) {
    const std::vector<Student> regenerated =
        schur_choice(ctx.students_of(applicants), *report.recovered_ranking,
                     bias, table.capacity, caps);
    if (detail::ids_of(regenerated) != chosen) {
      report.reproduces_table = false;
      break;
    }
  }
  return report;
}

}  // namespace schur

#endif  // SCHUR_AUDIT_HPP
