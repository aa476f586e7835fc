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

#include "litgec/edit.hpp"

#include "litgec/error.hpp"
#include "litgec/text.hpp"

namespace litgec {

std::string_view to_string(ErrorCategory category) noexcept {
  switch (category) {
    case ErrorCategory::Typographical: return "Typographical";
    case ErrorCategory::Punctuation: return "Punctuation";
    case ErrorCategory::SimilarSounding: return "SimilarSounding";
    case ErrorCategory::Spaces: return "Spaces";
    case ErrorCategory::AssimilationGemination: return "AssimilationGemination";
    case ErrorCategory::Casing: return "Casing";
    case ErrorCategory::Other: return "Other";
  }
  return "Other";
}

std::string_view display_name(ErrorCategory category) noexcept {
  switch (category) {
    case ErrorCategory::Typographical: return "Typographical";
    case ErrorCategory::Punctuation: return "Punctuation";
    case ErrorCategory::SimilarSounding: return "Similar sounding letters";
    case ErrorCategory::Spaces: return "Add/delete spaces";
    case ErrorCategory::AssimilationGemination: return "Assimilation/Gemination";
    case ErrorCategory::Casing: return "Upper/Lower casing";
    case ErrorCategory::Other: return "Other";
  }
  return "Other";
}

std::optional<ErrorCategory> category_from_string(std::string_view name) noexcept {
  for (const auto c : kAllCategories) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

std::u32string apply_edits(std::u32string_view source, std::span<const Edit> edits) {
  std::size_t prev_end = 0;
  for (const auto& e : edits) {
    if (e.src_start > e.src_end || e.src_end > source.size() || e.src_start < prev_end) {
      throw Error(ErrorCode::InvalidInput,
                  "edits must be sorted, disjoint and inside the source text");
    }
    prev_end = e.src_end;
  }
  std::u32string out(source);
  for (auto it = edits.rbegin(); it != edits.rend(); ++it) {
    out.replace(it->src_start, it->src_end - it->src_start, utf8_decode(it->replacement));
  }
  return out;
}

std::string apply_edits(std::string_view source, std::span<const Edit> edits) {
  const auto s = utf8_decode(source);
  return utf8_encode(apply_edits(std::u32string_view(s), edits));
}

}  // namespace litgec
