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

#ifndef SCHUR_MAJORIZATION_HPP
#define SCHUR_MAJORIZATION_HPP

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "schur/error.hpp"
#include "schur/rational.hpp"
#include "schur/types.hpp"

namespace schur {

/// Derives the bias b = 1/n - r from an ideal ratio r on the simplex.
inline BiasSpec derive_bias(const std::vector<Rat>& ratio) {
  const std::size_t n = ratio.size();
  if (n == 0) throw InputError("ideal ratio must have at least one entry");
  Rat sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (ratio[i] < 0) {
      throw InputError("ideal ratio entry " + std::to_string(i + 1) +
                       " is negative: " + to_string(ratio[i]));
    }
    sum += ratio[i];
  }
  if (sum != 1) {
    throw InputError("ideal ratio entries sum to " + to_string(sum) +
                     ", expected exactly 1");
  }
  BiasSpec spec;
  spec.ideal_ratio = ratio;
  const Rat uniform(1, static_cast<long>(n));
  spec.bias.reserve(n);
  for (std::size_t i = 0; i < n; ++i) spec.bias.push_back(uniform - ratio[i]);
  return spec;
}

namespace detail {

inline void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) {
    throw InputError("dimension mismatch: " + std::to_string(a) + " vs " +
                     std::to_string(b));
  }
}

/// Descending prefix sums; prefix[k] = sum of the k+1 largest entries.
inline std::vector<Rat> descending_prefix_sums(const RationalVector& v) {
  std::vector<Rat> sorted = v.entries;
  std::sort(sorted.begin(), sorted.end(), std::greater<Rat>());
  std::vector<Rat> prefix(sorted.size());
  Rat run = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    run += sorted[i];
    prefix[i] = run;
  }
  return prefix;
}

/// Majorization on precomputed prefix arrays of equal length.
inline bool majorizes_prefix(const std::vector<Rat>& px,
                             const std::vector<Rat>& py) {
  const std::size_t n = px.size();
  if (n == 0) return true;
  if (px[n - 1] != py[n - 1]) return false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (px[k] < py[k]) return false;
  }
  return true;
}

}  // namespace detail

/// T_b(x) = x + total(x) * b. Total-preserving since sum(b) = 0.
inline RationalVector transform(const RationalVector& x, const BiasSpec& b) {
  detail::require_same_dim(x.dim(), b.dim());
  const Rat total = x.total();
  RationalVector out;
  out.entries.reserve(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    out.entries.push_back(x.entries[i] + total * b.bias[i]);
  }
  return out;
}

inline RationalVector transform(const TypeDistribution& x, const BiasSpec& b) {
  return transform(RationalVector(x), b);
}

/// x majorizes y: descending prefix sums of x weakly dominate those of y and
/// the totals agree.
inline bool majorizes(const RationalVector& x, const RationalVector& y) {
  detail::require_same_dim(x.dim(), y.dim());
  return detail::majorizes_prefix(detail::descending_prefix_sums(x),
                                  detail::descending_prefix_sums(y));
}

inline bool strictly_majorizes(const RationalVector& x,
                               const RationalVector& y) {
  detail::require_same_dim(x.dim(), y.dim());
  const auto px = detail::descending_prefix_sums(x);
  const auto py = detail::descending_prefix_sums(y);
  return detail::majorizes_prefix(px, py) && !detail::majorizes_prefix(py, px);
}

/// Outcome of a b-diversity comparison between two distributions.
enum class DiversityOrder {
  kStrictlyMore,   // x is strictly more b-diverse than y
  kEqual,          // transforms majorize each other (permuted transforms)
  kStrictlyLess,   // y is strictly more b-diverse than x
  kIncomparable,   // neither transform majorizes the other
};

inline std::string to_string(DiversityOrder order) {
  switch (order) {
    case DiversityOrder::kStrictlyMore: return "strictly-more";
    case DiversityOrder::kEqual: return "equal-diverse";
    case DiversityOrder::kStrictlyLess: return "strictly-less";
    case DiversityOrder::kIncomparable: return "incomparable";
  }
  return "incomparable";
}

/// Compares b-diversity: x is more b-diverse than y when T_b(y) majorizes
/// T_b(x). Distributions of different totals are incomparable.
inline DiversityOrder more_b_diverse(const TypeDistribution& x,
                                     const TypeDistribution& y,
                                     const BiasSpec& b) {
  detail::require_same_dim(x.dim(), y.dim());
  detail::require_same_dim(x.dim(), b.dim());
  const auto tx = detail::descending_prefix_sums(transform(x, b));
  const auto ty = detail::descending_prefix_sums(transform(y, b));
  const bool y_over_x = detail::majorizes_prefix(ty, tx);
  const bool x_over_y = detail::majorizes_prefix(tx, ty);
  if (y_over_x && x_over_y) return DiversityOrder::kEqual;
  if (y_over_x) return DiversityOrder::kStrictlyMore;
  if (x_over_y) return DiversityOrder::kStrictlyLess;
  return DiversityOrder::kIncomparable;
}

}  // namespace schur

#endif  // SCHUR_MAJORIZATION_HPP
