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

#ifndef SCHUR_DIVERSITY_HPP
#define SCHUR_DIVERSITY_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "schur/caps.hpp"
#include "schur/error.hpp"
#include "schur/index_value.hpp"
#include "schur/majorization.hpp"
#include "schur/rational.hpp"
#include "schur/types.hpp"

namespace schur {

/// A diversity index: a total map from type distributions to exact
/// nonnegative values. Every built-in defines f(0) = 0; the axiom checks
/// sweep the lattice without the origin, matching the representation domain.
struct DiversityIndex {
  std::string name;
  std::function<IndexValue(const TypeDistribution&)> evaluate;
};

/// 1 - sum p_i^2 over proportions p_i = x_i / total.
inline DiversityIndex gini_simpson() {
  DiversityIndex f;
  f.name = "gini-simpson";
  f.evaluate = [](const TypeDistribution& x) {
    const Count total = x.total();
    if (total == 0) return IndexValue::rational(Rat(0));
    Rat sum = 0;
    for (const Count c : x.counts) sum += Rat(Int(c) * c, Int(total) * total);
    return IndexValue::rational(Rat(1) - sum);
  };
  return f;
}

/// -sum p_i ln p_i = ln total - (1/total) sum x_i ln x_i.
inline DiversityIndex shannon() {
  DiversityIndex f;
  f.name = "shannon";
  f.evaluate = [](const TypeDistribution& x) {
    const Count total = x.total();
    if (total == 0) return IndexValue::rational(Rat(0));
    std::map<Int, Rat> terms;
    terms[Int(total)] += 1;
    for (const Count c : x.counts) {
      if (c > 0) terms[Int(c)] -= Rat(Int(c), Int(total));
    }
    return IndexValue::log_linear(Rat(0), terms);
  };
  return f;
}

/// (1/(1-alpha)) ln sum p_i^alpha for alpha > 0, alpha != 1. Integer alpha
/// stays in the exactly comparable log form; fractional alpha uses the
/// power-mean form with interval comparisons.
inline DiversityIndex renyi(const Rat& alpha) {
  if (alpha <= 0 || alpha == 1) {
    throw InputError("renyi exponent must be positive and not 1, got " +
                     to_string(alpha));
  }
  DiversityIndex f;
  f.name = "renyi-" + to_string(alpha);
  f.evaluate = [alpha](const TypeDistribution& x) {
    const Count total = x.total();
    if (total == 0) return IndexValue::rational(Rat(0));
    const Rat coef = Rat(1) / (Rat(1) - alpha);
    if (boost::multiprecision::denominator(alpha) == 1) {
      const unsigned long a =
          boost::multiprecision::numerator(alpha).convert_to<unsigned long>();
      Int power_sum = 0;
      for (const Count c : x.counts) {
        if (c > 0) power_sum += boost::multiprecision::pow(Int(c), a);
      }
      std::map<Int, Rat> terms;
      terms[power_sum] += coef;
      terms[Int(total)] -= coef * alpha;
      return IndexValue::log_linear(Rat(0), terms);
    }
    std::vector<Rat> proportions;
    for (const Count c : x.counts) {
      if (c > 0) proportions.emplace_back(Int(c), Int(total));
    }
    return IndexValue::power_mean(alpha, std::move(proportions));
  };
  return f;
}

/// f(x) = c_k where k is the number of positive coordinates of x, f(0) = 0.
/// The coefficients c_1 <= ... <= c_n must be nonnegative and nondecreasing.
/// Schur-concavity and homogeneity hold for every such c; the shift
/// invariance check additionally needs plateaus in c to be absorbing
/// (strictly increasing, then constant), since equal coefficients followed
/// by a strict increase admit equal-value pairs that a shift separates.
inline DiversityIndex index_count_representation(std::vector<Rat> c) {
  if (c.empty()) {
    throw InputError("count representation needs at least one coefficient");
  }
  if (c.front() < 0) {
    throw InputError("count representation coefficients must be nonnegative");
  }
  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    if (c[k] > c[k + 1]) {
      throw InputError("count representation coefficients must be "
                       "nondecreasing, got " +
                       to_string(c[k]) + " before " + to_string(c[k + 1]));
    }
  }
  DiversityIndex f;
  f.name = "count-representation";
  f.evaluate = [c](const TypeDistribution& x) {
    if (x.dim() != c.size()) {
      throw InputError("count representation over " +
                       std::to_string(c.size()) +
                       " types applied to a distribution of dimension " +
                       std::to_string(x.dim()));
    }
    std::size_t positive = 0;
    for (const Count v : x.counts) positive += v > 0 ? 1 : 0;
    if (positive == 0) return IndexValue::rational(Rat(0));
    return IndexValue::rational(c[positive - 1]);
  };
  return f;
}

/// f(x) = x_1: not symmetric, so not Schur-concave. A stock failing case.
inline DiversityIndex first_coordinate_index() {
  DiversityIndex f;
  f.name = "first-coordinate";
  f.evaluate = [](const TypeDistribution& x) {
    return IndexValue::rational(Rat(x.counts.front()));
  };
  return f;
}

inline DiversityIndex constant_index(const Rat& value) {
  if (value < 0) throw InputError("constant index value must be nonnegative");
  DiversityIndex f;
  f.name = "constant-" + to_string(value);
  f.evaluate = [value](const TypeDistribution&) {
    return IndexValue::rational(value);
  };
  return f;
}

/// Truncated lattice {0,...,max_coordinate}^dim used by the exhaustive
/// checks. The box is closed under permutations and one-unit transfers, so
/// closure checks inside it are exact.
struct LatticeBound {
  int dim = 2;
  Count max_coordinate = 4;
};

struct IndexAxiomCheck {
  bool pass = true;
  std::vector<TypeDistribution> witness;
  std::string detail;
};

struct SConvexityCheck {
  bool pass = true;
  std::optional<TypeDistribution> missing;
  std::string detail;
};

namespace detail {

inline std::vector<TypeDistribution> lattice_points(const LatticeBound& bound,
                                                    const Caps& caps,
                                                    bool pairwise_work) {
  if (bound.dim < 1) throw InputError("lattice dimension must be positive");
  if (bound.max_coordinate < 0) {
    throw InputError("lattice coordinate bound must be nonnegative");
  }
  Int points = 1;
  for (int i = 0; i < bound.dim; ++i) points *= bound.max_coordinate + 1;
  const Int work = pairwise_work ? Int(points * points) : points;
  if (work > caps.lattice_enumeration) {
    throw ResourceError("lattice sweep over " + points.str() +
                        " points exceeds the enumeration cap");
  }
  std::vector<TypeDistribution> out;
  out.reserve(points.convert_to<std::size_t>());
  TypeDistribution x = TypeDistribution::zero(static_cast<std::size_t>(bound.dim));
  while (true) {
    out.push_back(x);
    std::size_t k = x.dim();
    while (k > 0 && x.counts[k - 1] == bound.max_coordinate) {
      x.counts[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
    ++x.counts[k - 1];
  }
  return out;
}

inline std::vector<IndexValue> evaluate_lattice(
    const DiversityIndex& f, const std::vector<TypeDistribution>& points) {
  std::vector<IndexValue> values;
  values.reserve(points.size());
  for (const TypeDistribution& x : points) values.push_back(f.evaluate(x));
  return values;
}

}  // namespace detail

/// Exhaustive Schur-concavity check: x majorizing y forces f(x) <= f(y) over
/// the truncated lattice minus the origin.
inline IndexAxiomCheck check_schur_concave(const DiversityIndex& f,
                                           const LatticeBound& bound,
                                           const Caps& caps = Caps{}) {
  const auto points = detail::lattice_points(bound, caps, true);
  const auto values = detail::evaluate_lattice(f, points);
  IndexAxiomCheck out;
  for (std::size_t a = 0; a < points.size(); ++a) {
    if (points[a].total() == 0) continue;
    for (std::size_t b = 0; b < points.size(); ++b) {
      if (a == b || points[b].total() != points[a].total()) continue;
      if (!majorizes(RationalVector(points[a]), RationalVector(points[b]))) {
        continue;
      }
      if (compare(values[a], values[b]) > 0) {
        out.pass = false;
        out.witness = {points[a], points[b]};
        out.detail = to_string(points[a]) + " majorizes " +
                     to_string(points[b]) + " but f gives " +
                     values[a].exact_string() + " > " +
                     values[b].exact_string();
        return out;
      }
    }
  }
  out.detail = "f(x) <= f(y) for every majorizing pair on the lattice";
  return out;
}

/// f(c x) = f(x) for every integer c >= 2 with c x inside the bound.
inline IndexAxiomCheck check_homogeneity0(const DiversityIndex& f,
                                          const LatticeBound& bound,
                                          const Caps& caps = Caps{}) {
  const auto points = detail::lattice_points(bound, caps, false);
  IndexAxiomCheck out;
  for (const TypeDistribution& x : points) {
    if (x.total() == 0) continue;
    const Count peak = *std::max_element(x.counts.begin(), x.counts.end());
    const IndexValue base = f.evaluate(x);
    for (Count c = 2; c * peak <= bound.max_coordinate; ++c) {
      TypeDistribution scaled = x;
      for (Count& v : scaled.counts) v *= c;
      if (compare(f.evaluate(scaled), base) != 0) {
        out.pass = false;
        out.witness = {x, scaled};
        out.detail = "f(" + to_string(scaled) + ") differs from f(" +
                     to_string(x) + ") under scaling by " + std::to_string(c);
        return out;
      }
    }
  }
  out.detail = "f is invariant under integer scalings inside the bound";
  return out;
}

/// For x, y with f(x) = f(y) and any z supported on the coordinates where
/// x and y agree: f(x + z) = f(y + z). Witness is the triple (x, y, z).
inline IndexAxiomCheck check_orthogonal_invariance(const DiversityIndex& f,
                                                   const LatticeBound& bound,
                                                   const Caps& caps = Caps{}) {
  const auto points = detail::lattice_points(bound, caps, true);
  const auto values = detail::evaluate_lattice(f, points);
  IndexAxiomCheck out;
  for (std::size_t a = 0; a < points.size(); ++a) {
    const TypeDistribution& x = points[a];
    if (x.total() == 0) continue;
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      const TypeDistribution& y = points[b];
      if (y.total() == 0 || compare(values[a], values[b]) != 0) continue;
      std::vector<std::size_t> shared;
      for (std::size_t i = 0; i < x.dim(); ++i) {
        if (x.counts[i] == y.counts[i]) shared.push_back(i);
      }
      TypeDistribution z = TypeDistribution::zero(x.dim());
      while (true) {
        std::size_t k = 0;
        while (k < shared.size() &&
               z.counts[shared[k]] + x.counts[shared[k]] ==
                   bound.max_coordinate) {
          z.counts[shared[k]] = 0;
          ++k;
        }
        if (k == shared.size()) break;
        ++z.counts[shared[k]];
        TypeDistribution xz = x, yz = y;
        for (const std::size_t i : shared) {
          xz.counts[i] += z.counts[i];
          yz.counts[i] += z.counts[i];
        }
        if (compare(f.evaluate(xz), f.evaluate(yz)) != 0) {
          out.pass = false;
          out.witness = {x, y, z};
          out.detail = "f(" + to_string(x) + ") = f(" + to_string(y) +
                       ") but adding z = " + to_string(z) +
                       " separates them";
          return out;
        }
      }
    }
  }
  out.detail = "no shift along shared coordinates separates equal-value pairs";
  return out;
}

/// Permutation closure plus closure under one-unit transfers from any
/// coordinate exceeding another by at least 2.
inline SConvexityCheck is_s_convex(const std::vector<TypeDistribution>& members) {
  SConvexityCheck out;
  if (members.empty()) {
    out.detail = "empty set is vacuously S-convex";
    return out;
  }
  const std::size_t dim = members.front().dim();
  for (const TypeDistribution& x : members) {
    if (x.dim() != dim) {
      throw InputError("S-convexity check needs members of one dimension");
    }
  }
  const std::set<TypeDistribution> set(members.begin(), members.end());
  for (const TypeDistribution& x : set) {
    TypeDistribution perm = x;
    std::sort(perm.counts.begin(), perm.counts.end());
    do {
      if (set.count(perm) == 0) {
        out.pass = false;
        out.missing = perm;
        out.detail = "permutation " + to_string(perm) + " of " + to_string(x) +
                     " is missing";
        return out;
      }
    } while (std::next_permutation(perm.counts.begin(), perm.counts.end()));
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        if (x.counts[i] - x.counts[j] < 2) continue;
        const TypeDistribution moved = x.minus_unit(i).plus_unit(j);
        if (set.count(moved) == 0) {
          out.pass = false;
          out.missing = moved;
          out.detail = "transfer " + to_string(moved) + " from " +
                       to_string(x) + " is missing";
          return out;
        }
      }
    }
  }
  out.detail = "closed under permutations and transfers";
  return out;
}

/// A finite set verified to be closed under permutations and transfers.
class SConvexSet {
 public:
  explicit SConvexSet(const std::vector<TypeDistribution>& members) {
    const SConvexityCheck check = is_s_convex(members);
    if (!check.pass) {
      throw PreconditionError("set is not S-convex: " + check.detail);
    }
    const std::set<TypeDistribution> dedup(members.begin(), members.end());
    members_.assign(dedup.begin(), dedup.end());
  }

  const std::vector<TypeDistribution>& members() const { return members_; }

 private:
  std::vector<TypeDistribution> members_;
};

struct ExtremalCentral {
  std::vector<TypeDistribution> extremal;
  std::vector<TypeDistribution> central;
};

/// Extremal members are strictly majorized by nobody in the set; central
/// members strictly majorize nobody in the set.
inline ExtremalCentral extremal_and_central(const SConvexSet& set) {
  ExtremalCentral out;
  for (const TypeDistribution& x : set.members()) {
    bool dominated = false, dominating = false;
    for (const TypeDistribution& z : set.members()) {
      if (z.total() != x.total()) continue;
      if (strictly_majorizes(RationalVector(z), RationalVector(x))) {
        dominated = true;
      }
      if (strictly_majorizes(RationalVector(x), RationalVector(z))) {
        dominating = true;
      }
    }
    if (!dominated) out.extremal.push_back(x);
    if (!dominating) out.central.push_back(x);
  }
  return out;
}

struct IndexOptima {
  std::vector<TypeDistribution> argmax;
  std::vector<TypeDistribution> argmin;
};

/// Exhaustive argmax/argmin of f over an S-convex set.
inline IndexOptima optimize_index_over_sconvex(const DiversityIndex& f,
                                               const SConvexSet& set) {
  if (set.members().empty()) {
    throw InputError("cannot optimize over an empty set");
  }
  const auto values = detail::evaluate_lattice(f, set.members());
  std::size_t best = 0, worst = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (compare(values[i], values[best]) > 0) best = i;
    if (compare(values[i], values[worst]) < 0) worst = i;
  }
  IndexOptima out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (compare(values[i], values[best]) == 0) {
      out.argmax.push_back(set.members()[i]);
    }
    if (compare(values[i], values[worst]) == 0) {
      out.argmin.push_back(set.members()[i]);
    }
  }
  return out;
}

struct ContourCheck {
  bool pass = true;            // the biconditional holds on the lattice
  bool schur_concave = true;   // left side
  bool contours_s_convex = true;  // right side
  std::string failing_alpha;   // exact value of the first bad contour level
  std::optional<TypeDistribution> missing;
  std::string detail;
};

/// Schur-concavity holds on the truncated lattice iff every upper contour
/// set at an achieved level is S-convex within it.
inline ContourCheck check_upper_contour_characterization(
    const DiversityIndex& f, const LatticeBound& bound,
    const Caps& caps = Caps{}) {
  ContourCheck out;
  const IndexAxiomCheck schur = check_schur_concave(f, bound, caps);
  out.schur_concave = schur.pass;

  const auto points = detail::lattice_points(bound, caps, true);
  std::vector<std::size_t> order;
  std::vector<IndexValue> values;
  values.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].total() == 0) continue;
    order.push_back(values.size());
    values.push_back(f.evaluate(points[i]));
  }
  std::vector<TypeDistribution> domain;
  for (const TypeDistribution& x : points) {
    if (x.total() != 0) domain.push_back(x);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return compare(values[a], values[b]) > 0;
                   });

  std::vector<TypeDistribution> contour;
  std::size_t i = 0;
  while (i < order.size() && out.contours_s_convex) {
    std::size_t j = i;
    while (j < order.size() &&
           compare(values[order[j]], values[order[i]]) == 0) {
      contour.push_back(domain[order[j]]);
      ++j;
    }
    const SConvexityCheck closure = is_s_convex(contour);
    if (!closure.pass) {
      out.contours_s_convex = false;
      out.failing_alpha = values[order[i]].exact_string();
      out.missing = closure.missing;
      out.detail = "upper contour at " + out.failing_alpha + " fails: " +
                   closure.detail;
    }
    i = j;
  }
  out.pass = out.schur_concave == out.contours_s_convex;
  if (out.detail.empty()) {
    out.detail = schur.pass ? "both sides of the characterization hold"
                            : "Schur-concavity fails: " + schur.detail;
  }
  return out;
}

}  // namespace schur

#endif  // SCHUR_DIVERSITY_HPP
