// Copyright 2026 The litgec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Reference implementations used only to check the library. They favour
// obviousness over speed and share no code with it.

#include <cstddef>
#include <string>
#include <vector>

namespace litgec::testing {

/// Damerau-Levenshtein distance by memoised recursion over every
/// transposition pair (i, j, k, l) with a[k] == b[j] and a[i] == b[l].
/// Quartic; keep inputs short.
std::size_t brute_force_distance(const std::u32string& a, const std::u32string& b);

/// Shortest number of single insertions, deletions, substitutions and
/// adjacent swaps turning a into b, by breadth-first search over strings
/// drawn from the union alphabet. Only for very short inputs.
std::size_t bfs_distance(const std::u32string& a, const std::u32string& b);

/// The classic full-table Lowrance-Wagner algorithm with last-occurrence
/// arrays; quadratic, for long-input checks.
std::size_t full_table_distance(const std::u32string& a, const std::u32string& b);

/// Two-pass mean and population standard deviation.
struct TwoPass {
  double mean = 0.0;
  double stddev = 0.0;
};
TwoPass two_pass(const std::vector<double>& xs);

}  // namespace litgec::testing
