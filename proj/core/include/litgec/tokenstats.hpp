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

// Corpus size statistics under different tokenizations.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "litgec/corpus.hpp"

namespace litgec {

inline constexpr std::string_view kProbeSentence = "Lietuva – graži šalis";

/// One token per code point.
std::vector<std::string> tokenize_chars(std::string_view text);
/// One token per UTF-8 byte; non-ASCII bytes are spelled "\xHH".
std::vector<std::string> tokenize_bytes(std::string_view text);
/// Whitespace-separated words with leading and trailing punctuation
/// stripped; punctuation-only tokens are dropped.
std::vector<std::string> tokenize_words(std::string_view text);

class Tokenizer {
 public:
  virtual ~Tokenizer() = default;
  virtual std::string_view name() const noexcept = 0;
  virtual std::vector<std::string> tokenize(std::string_view text) const = 0;
  virtual std::size_t count(std::string_view text) const { return tokenize(text).size(); }
  /// Human-readable tokenization, as printed in the report's example column.
  virtual std::string render(std::string_view text) const;
};

/// "chars", "bytes" or "words"; throws Error(UnknownTokenizer) otherwise.
std::unique_ptr<Tokenizer> make_tokenizer(std::string_view name);
std::vector<std::string> tokenizer_names();

/// Welford accumulator, mergeable so partial results combine in any order.
class RunningStats {
 public:
  void add(double x) noexcept;
  void merge(const RunningStats& o) noexcept;
  std::size_t count() const noexcept { return n_; }
  double mean() const noexcept { return mean_; }
  /// Population standard deviation.
  double stddev() const noexcept;
  double sum() const noexcept { return sum_; }

 private:
  std::size_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
  double sum_ = 0.0;
};

struct TokenStatsReport {
  std::string tokenizer;
  std::size_t samples = 0;
  double mean = 0.0;
  double stddev = 0.0;
  std::size_t total_tokens = 0;
  std::string example;  // rendering of kProbeSentence
};

/// Streams samples through a tokenizer. With `split_max` set, samples are
/// first cut with split_long and every piece counts as a sample.
class TokenStatsAccumulator {
 public:
  explicit TokenStatsAccumulator(const Tokenizer& tokenizer, std::optional<std::size_t> split_max = std::nullopt)
      : tokenizer_(tokenizer), split_max_(split_max) {}
  void add(std::string_view text);
  void merge(const TokenStatsAccumulator& o);
  /// Throws Error(EmptyCorpus) when nothing was added.
  TokenStatsReport report() const;

 private:
  const Tokenizer& tokenizer_;
  std::optional<std::size_t> split_max_;
  RunningStats stats_;
  std::size_t total_ = 0;
};

TokenStatsReport compute_stats(const std::vector<TextSample>& corpus, const Tokenizer& tokenizer,
                               std::optional<std::size_t> split_max = std::nullopt);

/// Table with rows per tokenizer: mean ± std, tokens in millions, example.
std::string render_stats(const std::vector<TokenStatsReport>& reports);
std::string stats_to_json(const std::vector<TokenStatsReport>& reports);

}  // namespace litgec
