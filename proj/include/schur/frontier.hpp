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

#ifndef SCHUR_FRONTIER_HPP
#define SCHUR_FRONTIER_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "schur/caps.hpp"
#include "schur/error.hpp"
#include "schur/majorization.hpp"
#include "schur/types.hpp"

namespace schur {

/// Applicant pool distribution x and capacity q.
struct BudgetSpec {
  TypeDistribution pool;
  Count capacity;

  BudgetSpec(TypeDistribution x, Count q) : pool(std::move(x)), capacity(q) {
    if (q < 1) throw InputError("capacity must be a positive integer");
  }

  Count target_total() const { return std::min(capacity, pool.total()); }
};

/// y is in B(x): y <= x coordinatewise and total(y) <= q.
inline bool in_budget(const TypeDistribution& y, const BudgetSpec& spec) {
  return y.leq(spec.pool) && y.total() <= spec.capacity;
}

/// Structure shared by nonsingleton frontiers: the constant a and, per pair
/// of elements, the involutory permutation relating their transforms.
struct FrontierDiagnostics {
  Rat shared_value;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>>
      involutions;  // keyed by element index pair (i < j); pi is 0-based
};

struct FrontierSet {
  std::vector<TypeDistribution> elements;  // lexicographically ascending
  Count target_total = 0;
  std::optional<FrontierDiagnostics> diagnostics;

  bool contains(const TypeDistribution& y) const {
    return std::binary_search(elements.begin(), elements.end(), y);
  }

  /// True when some frontier element covers the partial distribution
  /// coordinatewise; the admission test of the choice rule.
  bool any_covers(const TypeDistribution& partial) const {
    for (const TypeDistribution& e : elements) {
      if (partial.leq(e)) return true;
    }
    return false;
  }
};

namespace detail {

/// Exact minimum of sum((y_i + shift_i)^2) over coordinates [first, n) with
/// sum(y) = units and 0 <= y_i <= pool_i. The marginal cost of the t-th unit
/// in coordinate i is 2(t + shift_i) + 1, increasing in t, so repeatedly
/// funding the cheapest marginal is optimal.
class SeparableQuadraticMin {
 public:
  SeparableQuadraticMin(const std::vector<Count>& pool,
                        std::vector<Rat> shift)
      : pool_(pool), shift_(std::move(shift)) {
    suffix_capacity_.assign(pool_.size() + 1, 0);
    for (std::size_t i = pool_.size(); i-- > 0;) {
      suffix_capacity_[i] = suffix_capacity_[i + 1] + pool_[i];
    }
  }

  bool feasible(std::size_t first, Count units) const {
    return units >= 0 && units <= suffix_capacity_[first];
  }

  /// Requires feasible(first, units).
  Rat min_cost(std::size_t first, Count units) const {
    const std::size_t n = pool_.size();
    std::vector<Count> y(n - first, 0);
    for (Count step = 0; step < units; ++step) {
      std::size_t best = n;
      for (std::size_t i = first; i < n; ++i) {
        if (y[i - first] >= pool_[i]) continue;
        if (best == n ||
            Rat(y[i - first]) + shift_[i] < Rat(y[best - first]) + shift_[best]) {
          best = i;
        }
      }
      y[best - first] += 1;
    }
    Rat cost = 0;
    for (std::size_t i = first; i < n; ++i) {
      const Rat v = Rat(y[i - first]) + shift_[i];
      cost += v * v;
    }
    return cost;
  }

  Count suffix_capacity(std::size_t first) const {
    return suffix_capacity_[first];
  }

 private:
  const std::vector<Count>& pool_;
  std::vector<Rat> shift_;
  std::vector<Count> suffix_capacity_;
};

}  // namespace detail

/// Computes F_b(x) as the set of exact minimizers of sum(T_b(y)_i^2) over
/// budget elements with total fixed at min{q, total(x)}. One optimum comes
/// from greedy marginal allocation; the full set comes from a depth-first
/// enumeration pruned with the greedy completion bound, all in exact
/// rationals so ties survive.
inline FrontierSet frontier(const BudgetSpec& spec, const BiasSpec& bias,
                            const Caps& caps = {}) {
  const std::size_t n = spec.pool.dim();
  detail::require_same_dim(n, bias.dim());
  const Count m = spec.target_total();

  std::vector<Rat> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = Rat(m) * bias.bias[i];

  detail::SeparableQuadraticMin solver(spec.pool.counts, shift);
  const Rat optimum = solver.min_cost(0, m);

  FrontierSet out;
  out.target_total = m;
  std::vector<Count> y(n, 0);

  // Every explored node has greedy-completion cost equal to the optimum, so
  // each subtree contains at least one minimizer.
  auto emit = [&](auto&& self, std::size_t k, Count remaining,
                  const Rat& cost_so_far) -> void {
    if (k == n) {
      out.elements.emplace_back(TypeDistribution(y));
      if (static_cast<std::int64_t>(out.elements.size()) >
          caps.frontier_cardinality) {
        throw ResourceError("frontier cardinality exceeds cap of " +
                            std::to_string(caps.frontier_cardinality));
      }
      return;
    }
    const Count lo = std::max<Count>(0, remaining - solver.suffix_capacity(k + 1));
    const Count hi = std::min<Count>(spec.pool.counts[k], remaining);
    for (Count v = lo; v <= hi; ++v) {
      const Rat coord = Rat(v) + shift[k];
      const Rat cost = cost_so_far + coord * coord;
      if (cost + solver.min_cost(k + 1, remaining - v) == optimum) {
        y[k] = v;
        self(self, k + 1, remaining - v, cost);
        y[k] = 0;
      }
    }
  };
  emit(emit, 0, m, Rat(0));
  return out;
}

/// Definition-based oracle: enumerates the whole budget set and removes every
/// y for which some budget element z satisfies z > y or z is strictly more
/// b-diverse than y. Independent of the quadratic characterization.
inline FrontierSet frontier_bruteforce(const BudgetSpec& spec,
                                       const BiasSpec& bias,
                                       const Caps& caps = {}) {
  const std::size_t n = spec.pool.dim();
  detail::require_same_dim(n, bias.dim());

  std::vector<TypeDistribution> budget;
  {
    std::vector<Count> y(n, 0);
    auto enumerate = [&](auto&& self, std::size_t k, Count used) -> void {
      if (k == n) {
        budget.emplace_back(TypeDistribution(y));
        if (static_cast<std::int64_t>(budget.size()) >
            caps.budget_enumeration) {
          throw ResourceError("budget set enumeration exceeds cap of " +
                              std::to_string(caps.budget_enumeration));
        }
        return;
      }
      const Count hi = std::min<Count>(spec.pool.counts[k],
                                       spec.capacity - used);
      for (Count v = 0; v <= hi; ++v) {
        y[k] = v;
        self(self, k + 1, used + v);
      }
      y[k] = 0;
    };
    enumerate(enumerate, 0, 0);
  }

  // z > y for some z in B(x) iff some single increment stays in B(x).
  auto has_free_increment = [&](const TypeDistribution& y) {
    if (y.total() >= spec.capacity) return false;
    for (std::size_t i = 0; i < n; ++i) {
      if (y.counts[i] < spec.pool.counts[i]) return true;
    }
    return false;
  };
  std::vector<const TypeDistribution*> undominated;
  for (const TypeDistribution& y : budget) {
    if (!has_free_increment(y)) undominated.push_back(&y);
  }

  // A strict-diversity killer z must have the same total as y, and strict
  // majorization of transforms forces sum(T(z)^2) < sum(T(y)^2), so within a
  // bucket only elements with strictly smaller square-sum can kill y.
  struct Candidate {
    const TypeDistribution* dist;
    std::vector<Rat> prefix;
    Rat square_sum;
  };
  std::map<Count, std::vector<Candidate>> buckets;
  for (const TypeDistribution& z : budget) {
    Candidate c;
    c.dist = &z;
    const RationalVector t = transform(z, bias);
    c.prefix = detail::descending_prefix_sums(t);
    c.square_sum = 0;
    for (const Rat& e : t.entries) c.square_sum += e * e;
    buckets[z.total()].push_back(std::move(c));
  }
  for (auto& [total, bucket] : buckets) {
    std::sort(bucket.begin(), bucket.end(),
              [](const Candidate& a, const Candidate& b) {
                if (a.square_sum != b.square_sum)
                  return a.square_sum < b.square_sum;
                return *a.dist < *b.dist;
              });
  }

  FrontierSet out;
  out.target_total = spec.target_total();
  for (const TypeDistribution* y : undominated) {
    const auto& bucket = buckets[y->total()];
    const Candidate* self = nullptr;
    for (const Candidate& c : bucket) {
      if (*c.dist == *y) {
        self = &c;
        break;
      }
    }
    bool killed = false;
    for (const Candidate& z : bucket) {
      if (!(z.square_sum < self->square_sum)) break;
      bool dominates = true;
      for (std::size_t k = 0; k + 1 < n && dominates; ++k) {
        dominates = self->prefix[k] >= z.prefix[k];
      }
      if (dominates) {  // T(y) strictly majorizes T(z): z kills y
        killed = true;
        break;
      }
    }
    if (!killed) out.elements.push_back(*y);
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

/// Recovers the shared constant a and the pairwise involutions relating the
/// transforms of a nonsingleton frontier. Raises InternalError if the
/// expected structure does not hold, since that indicates a bug upstream.
inline FrontierDiagnostics frontier_diagnostics(const FrontierSet& f,
                                                const BiasSpec& bias) {
  if (f.elements.size() < 2) {
    throw PreconditionError(
        "frontier diagnostics require at least two elements");
  }
  const std::size_t n = f.elements.front().dim();
  std::vector<RationalVector> transforms;
  transforms.reserve(f.elements.size());
  for (const TypeDistribution& e : f.elements) {
    transforms.push_back(transform(e, bias));
  }

  FrontierDiagnostics diag;
  bool have_shared = false;
  for (std::size_t i = 0; i < f.elements.size(); ++i) {
    for (std::size_t j = i + 1; j < f.elements.size(); ++j) {
      const auto& ti = transforms[i].entries;
      const auto& tj = transforms[j].entries;
      std::vector<std::size_t> up, down;
      for (std::size_t k = 0; k < n; ++k) {
        const Rat d = ti[k] - tj[k];
        if (d == 1) {
          up.push_back(k);
        } else if (d == -1) {
          down.push_back(k);
        } else if (d != 0) {
          throw InternalError("frontier elements " + to_string(f.elements[i]) +
                              " and " + to_string(f.elements[j]) +
                              " differ by more than one at coordinate " +
                              std::to_string(k + 1));
        }
      }
      if (up.empty() || up.size() != down.size()) {
        throw InternalError("frontier pair lacks the balanced exchange sets");
      }
      const Rat a = ti[up.front()];
      for (std::size_t k : up) {
        if (ti[k] != a || tj[k] != a - 1) {
          throw InternalError("raised coordinates do not share one value");
        }
      }
      for (std::size_t k : down) {
        if (tj[k] != a || ti[k] != a - 1) {
          throw InternalError("lowered coordinates do not share one value");
        }
      }
      if (have_shared && a != diag.shared_value) {
        throw InternalError("frontier pairs disagree on the shared constant");
      }
      diag.shared_value = a;
      have_shared = true;

      std::vector<std::size_t> pi(n);
      for (std::size_t k = 0; k < n; ++k) pi[k] = k;
      for (std::size_t t = 0; t < up.size(); ++t) {
        pi[up[t]] = down[t];
        pi[down[t]] = up[t];
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (pi[pi[k]] != k || ti[k] != tj[pi[k]]) {
          throw InternalError("permutation is not a transform-matching involution");
        }
      }
      diag.involutions[{i, j}] = std::move(pi);
    }
  }
  return diag;
}

}  // namespace schur

#endif  // SCHUR_FRONTIER_HPP
