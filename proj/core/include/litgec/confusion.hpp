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

// Groups of similar-sounding letters and interchangeable punctuation, each
// a regular expression plus the corpus frequency of every distinct match.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "litgec/corpus.hpp"
#include "litgec/edit.hpp"

namespace litgec {

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const Span&, const Span&) = default;
};

/// ECMAScript regular expression evaluated over code points.
class Pattern {
 public:
  /// Throws Error(InvalidConfig) for an invalid expression.
  explicit Pattern(std::string source);

  const std::string& source() const noexcept { return source_; }

  /// Leftmost, non-overlapping, non-empty matches.
  std::vector<Span> find_all(std::u32string_view text) const;
  bool matches_fully(std::u32string_view text) const;

 private:
  std::string source_;
  std::shared_ptr<const std::wregex> regex_;
};

struct Variant {
  std::string surface;
  std::uint64_t weight = 0;

  friend bool operator==(const Variant&, const Variant&) = default;
};

class ConfusionGroup {
 public:
  ConfusionGroup(std::string pattern, std::vector<Variant> variants);

  const Pattern& pattern() const noexcept { return pattern_; }
  const std::vector<Variant>& variants() const noexcept { return variants_; }

  /// Punctuation when no variant contains a letter, SimilarSounding otherwise.
  ErrorCategory category() const noexcept { return category_; }

  /// Other variants than `surface`, with their weights, in table order. A
  /// surface that is not a listed variant gets every variant.
  std::vector<Variant> replacements_for(std::u32string_view surface) const;

  bool has_variant(std::u32string_view surface) const;

  /// Every code point appearing in any variant.
  const std::u32string& alphabet() const noexcept { return alphabet_; }

  friend bool operator==(const ConfusionGroup& a, const ConfusionGroup& b) {
    return a.pattern_.source() == b.pattern_.source() && a.variants_ == b.variants_;
  }

 private:
  Pattern pattern_;
  std::vector<Variant> variants_;
  std::vector<std::u32string> decoded_;
  std::u32string alphabet_;
  ErrorCategory category_;
};

class ConfusionTable {
 public:
  ConfusionTable() = default;
  explicit ConfusionTable(std::vector<ConfusionGroup> groups) : groups_(std::move(groups)) {}

  /// The sixteen groups with the frequency counts measured on a raw
  /// 2,909,403-sample Lithuanian web corpus.
  static const ConfusionTable& lithuanian_default();

  const std::vector<ConfusionGroup>& groups() const noexcept { return groups_; }

  /// Throws Error(InvalidConfig) when a weight is zero or a variant is not
  /// matched in full by its pattern.
  void validate() const;

  /// One group per line: pattern, then alternating variant and count, all
  /// tab separated. '#' starts a comment line.
  static ConfusionTable parse(std::istream& in);
  static ConfusionTable load(const std::filesystem::path& path);
  void write(std::ostream& out) const;
  void save(const std::filesystem::path& path) const;

  /// Aligned human-readable listing with one row per variant and its count;
  /// spaces inside matches are shown as '␣'.
  std::string render() const;

  friend bool operator==(const ConfusionTable&, const ConfusionTable&) = default;

 private:
  std::vector<ConfusionGroup> groups_;
};

/// Counts leftmost non-overlapping matches of each pattern over the corpus,
/// grouped by matched text. Variants are ordered by descending count, ties
/// by surface. Patterns without any match yield groups with no variants.
ConfusionTable derive_confusion_stats(const std::vector<TextSample>& corpus,
                                      const std::vector<std::string>& patterns);

/// Incremental form of derive_confusion_stats for streaming input.
class ConfusionCounter {
 public:
  explicit ConfusionCounter(const std::vector<std::string>& patterns);

  void add(std::string_view text);
  ConfusionTable table() const;

 private:
  std::vector<Pattern> patterns_;
  std::vector<std::vector<Variant>> counts_;
};

}  // namespace litgec
