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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace litgec {

enum class ErrorCategory : std::uint8_t {
  Typographical,
  Punctuation,
  SimilarSounding,
  Spaces,
  AssimilationGemination,
  Casing,
  Other,
};

inline constexpr std::array<ErrorCategory, 7> kAllCategories = {
    ErrorCategory::Typographical,  ErrorCategory::Punctuation,
    ErrorCategory::SimilarSounding, ErrorCategory::Spaces,
    ErrorCategory::AssimilationGemination, ErrorCategory::Casing,
    ErrorCategory::Other,
};

/// Identifier used in files ("SimilarSounding").
std::string_view to_string(ErrorCategory category) noexcept;
/// Row label for report tables ("Similar sounding letters").
std::string_view display_name(ErrorCategory category) noexcept;
std::optional<ErrorCategory> category_from_string(std::string_view name) noexcept;

/// A span correction: replace [src_start, src_end) of the (corrupted)
/// source with `replacement`. Offsets count code points.
struct Edit {
  std::size_t src_start = 0;
  std::size_t src_end = 0;
  std::string replacement;
  ErrorCategory category = ErrorCategory::Other;

  friend bool operator==(const Edit&, const Edit&) = default;
};

/// Same span and same replacement; category is not compared.
inline bool same_correction(const Edit& a, const Edit& b) noexcept {
  return a.src_start == b.src_start && a.src_end == b.src_end &&
         a.replacement == b.replacement;
}

struct ParallelPair {
  std::string id;
  std::string source;  // corrupted
  std::string target;  // reference
  std::vector<Edit> gold_edits;

  friend bool operator==(const ParallelPair&, const ParallelPair&) = default;
};

/// Applies sorted, disjoint edits (right to left). Throws Error(InvalidInput)
/// on overlap, disorder or spans past the end of the text.
std::string apply_edits(std::string_view source, std::span<const Edit> edits);
std::u32string apply_edits(std::u32string_view source, std::span<const Edit> edits);

}  // namespace litgec
