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

#ifndef SCHUR_CAPS_HPP
#define SCHUR_CAPS_HPP

#include <cstdint>

namespace schur {

/// Enumeration guards. Exceeding a cap raises ResourceError; the caps bound
/// work, they never change results.
struct Caps {
  std::int64_t budget_enumeration = 1'000'000;  // |B(x)| for brute force
  std::int64_t frontier_cardinality = 50'000;   // |F_b(x)|
  std::int64_t subset_enumeration = 1'000'000;  // subsets scanned for bases
  std::int64_t lattice_enumeration = 1'000'000; // diversity-index sweeps
  int universe_size = 12;                       // audited universe, 2^n subsets
};

}  // namespace schur

#endif  // SCHUR_CAPS_HPP
