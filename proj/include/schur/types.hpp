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

#ifndef SCHUR_TYPES_HPP
#define SCHUR_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "schur/error.hpp"
#include "schur/rational.hpp"

namespace schur {

using Count = std::int64_t;

/// Integer vector counting students per type. Immutable by convention: all
/// operations return fresh values.
struct TypeDistribution {
  std::vector<Count> counts;

  TypeDistribution() = default;
  explicit TypeDistribution(std::vector<Count> c) : counts(std::move(c)) {
    if (counts.empty()) {
      throw InputError("type distribution needs at least one type");
    }
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (counts[i] < 0) {
        throw InputError("type distribution has negative count at coordinate " +
                         std::to_string(i + 1));
      }
    }
  }

  static TypeDistribution zero(std::size_t n) {
    return TypeDistribution(std::vector<Count>(n, 0));
  }

  /// Unit vector with a single student of the given 0-based type.
  static TypeDistribution unit(std::size_t n, std::size_t type) {
    TypeDistribution d = zero(n);
    d.counts.at(type) = 1;
    return d;
  }

  std::size_t dim() const { return counts.size(); }

  Count total() const {
    return std::accumulate(counts.begin(), counts.end(), Count{0});
  }

  /// Coordinatewise y <= x.
  bool leq(const TypeDistribution& x) const {
    if (dim() != x.dim()) {
      throw InputError("dimension mismatch: " + std::to_string(dim()) +
                       " vs " + std::to_string(x.dim()));
    }
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (counts[i] > x.counts[i]) return false;
    }
    return true;
  }

  TypeDistribution plus_unit(std::size_t type) const {
    TypeDistribution d = *this;
    d.counts.at(type) += 1;
    return d;
  }

  TypeDistribution minus_unit(std::size_t type) const {
    TypeDistribution d = *this;
    if (d.counts.at(type) == 0) {
      throw InputError("cannot remove a unit from empty coordinate " +
                       std::to_string(type + 1));
    }
    d.counts[type] -= 1;
    return d;
  }

  friend bool operator==(const TypeDistribution& a, const TypeDistribution& b) {
    return a.counts == b.counts;
  }
  /// Lexicographic; the canonical ordering used for all set-valued output.
  friend bool operator<(const TypeDistribution& a, const TypeDistribution& b) {
    return a.counts < b.counts;
  }
};

inline std::string to_string(const TypeDistribution& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.counts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(d.counts[i]);
  }
  return out + ")";
}

/// Vector of exact rationals; transformed distributions live here and may
/// carry negative entries.
struct RationalVector {
  std::vector<Rat> entries;

  RationalVector() = default;
  explicit RationalVector(std::vector<Rat> e) : entries(std::move(e)) {}
  explicit RationalVector(const TypeDistribution& d) {
    entries.reserve(d.dim());
    for (Count c : d.counts) entries.emplace_back(c);
  }

  std::size_t dim() const { return entries.size(); }

  Rat total() const {
    Rat sum = 0;
    for (const Rat& e : entries) sum += e;
    return sum;
  }

  friend bool operator==(const RationalVector& a, const RationalVector& b) {
    return a.entries == b.entries;
  }
};

inline std::string to_string(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.entries.size(); ++i) {
    if (i) out += ",";
    out += to_string(v.entries[i]);
  }
  return out + ")";
}

/// Ideal ratio r on the simplex together with the bias b = 1/n - r it
/// implies. Both are exact rationals; sum(b) = 0 by construction.
struct BiasSpec {
  std::vector<Rat> ideal_ratio;
  std::vector<Rat> bias;

  std::size_t dim() const { return bias.size(); }

  bool is_zero() const {
    for (const Rat& v : bias) {
      if (v != 0) return false;
    }
    return true;
  }

  /// Uniform ideal ratio; bias vanishes and b-diversity reduces to plain
  /// majorization comparison.
  static BiasSpec zero(std::size_t n) {
    if (n == 0) throw InputError("bias requires at least one type");
    BiasSpec spec;
    spec.ideal_ratio.assign(n, Rat(1, static_cast<long>(n)));
    spec.bias.assign(n, Rat(0));
    return spec;
  }
};

}  // namespace schur

#endif  // SCHUR_TYPES_HPP
