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

// Gold-corpus construction: automatic corrections, statistical filters,
// deduplication and splitting of over-long paragraphs.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace litgec {

struct TextSample {
  std::string id;
  std::string text;
  std::optional<std::string> source;

  friend bool operator==(const TextSample&, const TextSample&) = default;
};

enum class SpaceRatioMode {
  Minimum,  // discard when the ratio is below the bound (near-spaceless URLs)
  Maximum,  // discard when the ratio is above the bound
};

inline constexpr std::u32string_view kDefaultExtraAllowed = U"€₤$%wx";

struct FilterConfig {
  std::size_t min_chars = 20;
  double min_letter_fraction = 0.98;
  double space_ratio_bound = 0.02;
  SpaceRatioMode space_ratio_mode = SpaceRatioMode::Minimum;
  std::u32string extra_allowed_chars{kDefaultExtraAllowed};

  /// Throws Error(InvalidConfig) when a ratio is outside [0, 1].
  void validate() const;
};

enum class FilterReason { Kept, TooShort, LowLetterFraction, SpaceRatio, Duplicate };

std::string_view to_string(FilterReason reason) noexcept;

struct FilterVerdict {
  bool keep = true;
  FilterReason reason = FilterReason::Kept;

  friend bool operator==(const FilterVerdict&, const FilterVerdict&) = default;
};

// Each fixer only touches quote glyphs and whitespace; letters, digits and
// other punctuation pass through unchanged.

/// Rewrites paired quotes (``..'', "..", “..”, ‘‘..’’, ,,..``, ”..”) to „..“.
/// Quote tokens pair up left to right; a trailing unpaired one is kept.
std::string normalize_quotes(std::string_view text);
std::u32string normalize_quotes(std::u32string_view text);

/// 1918m. -> 1918 m., A.Sabonis -> A. Sabonis, t.t. -> t. t.
std::string fix_missing_space(std::string_view text);
std::u32string fix_missing_space(std::u32string_view text);

/// Drops horizontal whitespace before , . ; : ! ? and closing brackets.
std::string fix_extra_space(std::string_view text);
std::u32string fix_extra_space(std::u32string_view text);

/// quotes -> missing space -> extra space, repeated until nothing changes.
std::string clean_text(std::string_view text);
std::u32string clean_text(std::u32string_view text);

TextSample preprocess(TextSample sample);

/// Share of non-space characters that are Lithuanian letters, digits,
/// standard punctuation or one of `extra`. 1.0 for empty or all-space text.
double letter_fraction(std::string_view text,
                       std::u32string_view extra = kDefaultExtraAllowed);

/// Spaces per non-space character, saturated at 1.0 so the result stays a
/// ratio. 0.0 for empty text.
double space_ratio(std::string_view text);

/// TooShort, then LowLetterFraction, then SpaceRatio; first failure wins.
FilterVerdict filter(const TextSample& sample, const FilterConfig& cfg);

/// Exact-match deduplication on trimmed text, first occurrence wins.
/// Holds the seen-set, so it must see the stream in one serialized pass.
class Deduplicator {
 public:
  /// True when the sample has not been seen before (and records it).
  bool admit(const TextSample& sample);
  std::size_t seen() const noexcept { return seen_.size(); }

 private:
  std::unordered_set<std::string> seen_;
};

std::vector<TextSample> dedupe(std::vector<TextSample> samples);

struct SplitResult {
  std::vector<std::string> pieces;
  // separators[k] sits between pieces[k] and pieces[k + 1].
  std::vector<std::string> separators;

  std::string join() const;
};

/// Cuts text into pieces of at most max_chars code points at the last
/// whitespace run that fits; falls back to a hard cut inside a token.
/// Throws Error(InvalidInput) when max_chars is 0.
SplitResult split_long(std::string_view text, std::size_t max_chars);

}  // namespace litgec
