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

// Baseline corrector: the corpus cleaning rules followed by a word-level
// noisy-channel reranker with a unigram language model.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "litgec/confusion.hpp"
#include "litgec/corpus.hpp"
#include "litgec/keyboard.hpp"

namespace litgec {

/// The corpus cleaning pass, reused as a corrector.
std::string rule_correct(std::string_view text);

/// Case-sensitive word counts with add-one smoothing.
class UnigramModel {
 public:
  void add_text(std::string_view text);
  void add_word(std::string_view word, std::uint64_t count = 1);

  std::uint64_t count(std::string_view word) const;
  std::uint64_t total() const noexcept { return total_; }
  std::size_t vocabulary_size() const noexcept { return counts_.size(); }
  const std::map<std::string, std::uint64_t, std::less<>>& counts() const noexcept { return counts_; }

  /// (count + 1) / (total + V).
  double probability(std::string_view word) const;
  double log_probability(std::string_view word) const;

  /// Header "unigram<TAB>total<TAB>V", then sorted "word<TAB>count" lines.
  void write(std::ostream& out) const;
  void save(const std::filesystem::path& path) const;
  /// Throws Error(ParseError) on malformed input and Error(IoError) when the
  /// file cannot be opened.
  static UnigramModel read(std::istream& in);
  static UnigramModel load(const std::filesystem::path& path);

  friend bool operator==(const UnigramModel&, const UnigramModel&) = default;

 private:
  std::map<std::string, std::uint64_t, std::less<>> counts_;
  std::uint64_t total_ = 0;
};

/// Words as tokenize_words sees them. Throws Error(EmptyCorpus) when the
/// corpus has no words.
UnigramModel build_unigram(const std::vector<TextSample>& corpus);

/// Per-character error probabilities, by default the generator's rates.
struct ChannelModel {
  double typo = 0.02;
  double similar = 0.02;
  double casing = 0.02;

  /// Throws Error(InvalidConfig) unless every probability is in (0, 1).
  void validate() const;
  /// Probability that one character passes through unchanged.
  double keep() const noexcept { return (1.0 - typo) * (1.0 - similar) * (1.0 - casing); }
};

enum class CandidateKind : std::uint8_t { Identity, Confusion, Keyboard, Casing };

struct Candidate {
  std::string text;
  CandidateKind kind = CandidateKind::Identity;
};

/// The word itself first, then confusion-group substitutions, keyboard
/// substitutions, deletions, insertions and transpositions, then the
/// first-letter case flip (when `case_flip`); duplicates keep their first
/// position and kind.
std::vector<Candidate> candidates(std::string_view word, const ConfusionTable& table, const KeyboardModel& kbd,
                                  bool case_flip = true);

/// log P(observed | candidate) for a single-edit channel.
double channel_log_probability(const Candidate& c, std::size_t observed_length, const ChannelModel& channel);

/// Best candidate for one word; ties favour the word itself, then the
/// lexicographically smallest text.
std::string correct_word(std::string_view word, const UnigramModel& model, const ChannelModel& channel,
                         const ConfusionTable& table, const KeyboardModel& kbd, bool case_flip = true);

/// rule_correct, then every whitespace-separated word (without its leading
/// and trailing punctuation) replaced by its best candidate. Sentence-initial
/// words are not offered a case flip.
std::string noisy_channel_correct(std::string_view text, const UnigramModel& model, const ChannelModel& channel,
                                  const ConfusionTable& table, const KeyboardModel& kbd);

}  // namespace litgec
