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

// Synthetic error injection. Every family proposes changes on the current
// text; positions altered by an earlier family are off limits for later
// ones, so no two corruptions overlap. Gold edits are recovered at the end
// by aligning the corrupted text against the reference with the same
// aligner the evaluator uses, which makes them canonical for scoring.

#include <array>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "litgec/confusion.hpp"
#include "litgec/corpus.hpp"
#include "litgec/edit.hpp"
#include "litgec/keyboard.hpp"
#include "litgec/random.hpp"

namespace litgec {

enum class TypoOp : std::uint8_t { Substitution, Deletion, Insertion, Transposition };

struct TypoMix {
  double substitution = 0.361;
  double deletion = 0.317;
  double insertion = 0.178;
  double transposition = 0.144;

  std::array<double, 4> weights() const noexcept {
    return {substitution, deletion, insertion, transposition};
  }
};

inline const std::set<ErrorCategory> kDefaultGroups = {
    ErrorCategory::Typographical,   ErrorCategory::Punctuation,
    ErrorCategory::SimilarSounding, ErrorCategory::Spaces,
    ErrorCategory::AssimilationGemination, ErrorCategory::Casing,
};

struct CorruptionConfig {
  double typo_rate = 0.02;       // per character
  TypoMix typo_mix;
  double confusion_rate = 0.02;  // per confusion-group match
  double other_rate = 0.02;      // per rule match (gemination, assimilation, casing, spaces)
  std::set<ErrorCategory> enabled_groups = kDefaultGroups;
  // Inverse of the corpus cleaning rules: wrong quotes, "1918m.", "A.Sabonis",
  // "darbui ,". Off by default; used to test the rule-based corrector.
  bool rule_errors = false;
  double rule_rate = 0.02;
  std::uint64_t seed = 0;

  /// Throws Error(InvalidConfig) for rates outside [0, 1] or a mix that does
  /// not sum to 1.
  void validate() const;
};

struct FamilyStats {
  std::size_t eligible = 0;
  std::size_t applied = 0;

  FamilyStats& operator+=(const FamilyStats& o) noexcept {
    eligible += o.eligible;
    applied += o.applied;
    return *this;
  }
};

struct CorruptionStats {
  FamilyStats typos, confusions, gemination, assimilation, casing, spaces, rules;
  std::array<std::size_t, 4> typo_ops{};  // indexed by TypoOp
  std::array<std::size_t, 7> edits_by_category{};

  CorruptionStats& operator+=(const CorruptionStats& o) noexcept;
};

struct CorruptionResult {
  std::string text;
  std::vector<Edit> edits;  // corrected-direction, in `text` coordinates
};

// Single-family entry points. Each one corrupts `text` in isolation and
// reports its gold edits; `stats` is optional.

CorruptionResult corrupt_typos(std::string_view text, const CorruptionConfig& cfg,
                               const KeyboardModel& kbd, Rng& rng, CorruptionStats* stats = nullptr);
CorruptionResult corrupt_confusions(std::string_view text, const ConfusionTable& table, double rate,
                                    Rng& rng, CorruptionStats* stats = nullptr);
CorruptionResult corrupt_gemination(std::string_view text, double rate, Rng& rng,
                                    CorruptionStats* stats = nullptr);
CorruptionResult corrupt_assimilation(std::string_view text, double rate, Rng& rng,
                                      CorruptionStats* stats = nullptr);
CorruptionResult corrupt_casing(std::string_view text, double rate, Rng& rng,
                                CorruptionStats* stats = nullptr);
CorruptionResult corrupt_spaces(std::string_view text, double rate, Rng& rng,
                                CorruptionStats* stats = nullptr);
CorruptionResult corrupt_rule_errors(std::string_view text, double rate, Rng& rng,
                                     CorruptionStats* stats = nullptr);

/// All enabled families in the order typos, confusions, gemination,
/// assimilation, casing, spaces (then rule errors). Each family draws from
/// its own stream keyed by (cfg.seed, sample.id), so the result depends on
/// nothing but the arguments.
ParallelPair corrupt(const TextSample& sample, const CorruptionConfig& cfg,
                     const ConfusionTable& table, const KeyboardModel& kbd,
                     CorruptionStats* stats = nullptr);

namespace detail {

// Exposed for tests: the sites each rule family would consider.
std::vector<Span> gemination_sites(std::u32string_view text);
std::vector<Span> assimilation_sites(std::u32string_view text);
std::vector<std::size_t> casing_sites(std::u32string_view text);
bool sentence_initial(std::u32string_view text, std::size_t word_start);
char32_t voicing_counterpart(char32_t c) noexcept;
bool in_sibilant_group(char32_t c) noexcept;  // cčsšzž
bool is_voiceless(char32_t c) noexcept;       // ptksš
bool is_voiced(char32_t c) noexcept;          // bdgzž

}  // namespace detail

}  // namespace litgec
