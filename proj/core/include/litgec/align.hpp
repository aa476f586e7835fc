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

// Character-level Damerau-Levenshtein alignment and edit extraction.
//
// The distance is the unrestricted Damerau-Levenshtein metric (Lowrance and
// Wagner) with unit costs: a transposed pair may have characters deleted or
// inserted between the two halves, each costed separately. That keeps the
// cost a true metric. Adjacent swaps cost 1.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "litgec/edit.hpp"

namespace litgec {

enum class AlignOpKind : std::uint8_t { Match, Substitute, Transpose, Delete, Insert };

std::string_view to_string(AlignOpKind kind) noexcept;

/// One primitive step: consumes `src` from the first string at src_pos and
/// emits `tgt` into the second at tgt_pos.
///
/// A Transpose consumes "x ... y" and emits "y ... x"; at most one of the two
/// middles is non-empty in an optimal script.
struct AlignOp {
  AlignOpKind kind = AlignOpKind::Match;
  std::size_t src_pos = 0;
  std::size_t tgt_pos = 0;
  std::u32string src;
  std::u32string tgt;

  std::size_t cost() const noexcept;

  friend bool operator==(const AlignOp&, const AlignOp&) = default;
};

struct AlignmentScript {
  std::vector<AlignOp> ops;
  std::size_t cost = 0;

  /// Rebuilds the second string from the first. Throws Error(InvalidInput)
  /// when the script does not consume `first` exactly.
  std::u32string replay(std::u32string_view first) const;
};

/// Minimal-cost script. Ties go to match, then substitute, transpose,
/// delete, insert, decided greedily from the left end of both strings.
AlignmentScript align(std::u32string_view a, std::u32string_view b);
AlignmentScript align(std::string_view a, std::string_view b);

std::size_t edit_distance(std::u32string_view a, std::u32string_view b);
std::size_t edit_distance(std::string_view a, std::string_view b);

/// Merges every maximal run of non-match operations into one span edit in
/// source coordinates. Categories are left as Other.
std::vector<Edit> extract_edits(std::u32string_view source, std::u32string_view hypothesis);
std::vector<Edit> extract_edits(std::string_view source, std::string_view hypothesis);

}  // namespace litgec
