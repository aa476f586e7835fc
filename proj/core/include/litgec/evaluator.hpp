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

// Edit-level scoring of corrections against gold parallel pairs.

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "litgec/confusion.hpp"
#include "litgec/corpus.hpp"
#include "litgec/edit.hpp"

namespace litgec {

/// (1 + b^2) P R / (b^2 P + R); 0 when the numerator is 0.
double f_beta(double precision, double recall, double beta) noexcept;

/// Surface-form category of a correction of `source`, tried in this order:
/// whitespace only, case only, punctuation, gemination or assimilation,
/// similar-sounding letters, and typographical as the fallback.
ErrorCategory classify_edit(const Edit& edit, std::u32string_view source, const ConfusionTable& table);
ErrorCategory classify_edit(const Edit& edit, std::string_view source, const ConfusionTable& table);

struct Counts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t samples = 0;  // pairs with at least one gold edit in scope

  /// 1 when nothing was proposed.
  double precision() const noexcept { return tp + fp ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 1.0; }
  /// 1 when nothing was expected.
  double recall() const noexcept { return tp + fn ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 1.0; }
  double f(double beta) const noexcept { return f_beta(precision(), recall(), beta); }

  Counts& operator+=(const Counts& o) noexcept {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    samples += o.samples;
    return *this;
  }
  friend bool operator==(const Counts&, const Counts&) = default;
};

struct EvalReport {
  double beta = 0.5;
  std::size_t pairs = 0;
  Counts total;  // total.samples is the number of pairs with any gold edit
  std::array<Counts, kAllCategories.size()> per_category{};

  double precision() const noexcept { return total.precision(); }
  double recall() const noexcept { return total.recall(); }
  double f() const noexcept { return total.f(beta); }
  std::size_t samples_affected() const noexcept { return total.samples; }
  const Counts& category(ErrorCategory c) const noexcept { return per_category[static_cast<std::size_t>(c)]; }

  /// Counts are a commutative monoid, so partial reports merge in any order.
  EvalReport& operator+=(const EvalReport& o) noexcept;

  /// Text table: one row per category with F, #samples, P, R and counts.
  std::string render() const;
  std::string to_json() const;
};

/// Hypothesis edits extracted against pair.source and matched to the gold
/// edits on exact span and replacement.
EvalReport score_pair(const ParallelPair& gold, std::string_view hypothesis, double beta,
                      const ConfusionTable& table = ConfusionTable::lithuanian_default());

/// Throws Error(LengthMismatch) when the counts differ.
EvalReport score(const std::vector<ParallelPair>& gold, const std::vector<std::string>& hypotheses,
                 double beta = 0.5, const ConfusionTable& table = ConfusionTable::lithuanian_default());

/// Pairs hypotheses with gold by position and additionally requires equal
/// ids; throws Error(InvalidInput) on the first id that differs.
EvalReport score(const std::vector<ParallelPair>& gold, const std::vector<TextSample>& hypotheses,
                 double beta = 0.5, const ConfusionTable& table = ConfusionTable::lithuanian_default());

}  // namespace litgec
