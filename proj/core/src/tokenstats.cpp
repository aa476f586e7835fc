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

#include "litgec/tokenstats.hpp"

#include <cmath>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <sstream>

#include "litgec/error.hpp"
#include "litgec/text.hpp"

namespace litgec {

std::vector<std::string> tokenize_chars(std::string_view text) {
  std::vector<std::string> out;
  for (const char32_t c : utf8_decode(text)) out.push_back(utf8_encode(c));
  return out;
}

std::vector<std::string> tokenize_bytes(std::string_view text) {
  if (!is_valid_utf8(text)) throw Error(ErrorCode::InvalidUtf8, "invalid UTF-8 input");
  std::vector<std::string> out;
  out.reserve(text.size());
  for (const char ch : text) {
    const auto b = static_cast<unsigned char>(ch);
    if (b < 0x80) {
      out.emplace_back(1, ch);
    } else {
      char buf[5];
      std::snprintf(buf, sizeof buf, "\\x%02x", b);
      out.emplace_back(buf);
    }
  }
  return out;
}

std::vector<std::string> tokenize_words(std::string_view text) {
  const auto u = utf8_decode(text);
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < u.size()) {
    while (i < u.size() && chars::is_space(u[i])) ++i;
    std::size_t j = i;
    while (j < u.size() && !chars::is_space(u[j])) ++j;
    std::size_t b = i;
    std::size_t e = j;
    while (b < e && chars::is_punct(u[b])) ++b;
    while (e > b && chars::is_punct(u[e - 1])) --e;
    if (b < e) out.push_back(utf8_encode(std::u32string_view(u).substr(b, e - b)));
    i = j;
  }
  return out;
}

std::string Tokenizer::render(std::string_view text) const {
  std::string out;
  for (const auto& t : tokenize(text)) {
    if (!out.empty()) out.push_back(' ');
    out += '[' + t + ']';
  }
  return out;
}

namespace {

class CharTokenizer final : public Tokenizer {
 public:
  std::string_view name() const noexcept override { return "chars"; }
  std::vector<std::string> tokenize(std::string_view text) const override { return tokenize_chars(text); }
  std::size_t count(std::string_view text) const override { return utf8_length(text); }
  std::string render(std::string_view text) const override { return std::string(text); }
};

class ByteTokenizer final : public Tokenizer {
 public:
  std::string_view name() const noexcept override { return "bytes"; }
  std::vector<std::string> tokenize(std::string_view text) const override { return tokenize_bytes(text); }
  std::size_t count(std::string_view text) const override {
    if (!is_valid_utf8(text)) throw Error(ErrorCode::InvalidUtf8, "invalid UTF-8 input");
    return text.size();
  }
  std::string render(std::string_view text) const override {
    std::string out;
    for (const auto& t : tokenize(text)) out += t;
    return out;
  }
};

class WordTokenizer final : public Tokenizer {
 public:
  std::string_view name() const noexcept override { return "words"; }
  std::vector<std::string> tokenize(std::string_view text) const override { return tokenize_words(text); }
};

}  // namespace

std::unique_ptr<Tokenizer> make_tokenizer(std::string_view name) {
  if (name == "chars") return std::make_unique<CharTokenizer>();
  if (name == "bytes") return std::make_unique<ByteTokenizer>();
  if (name == "words") return std::make_unique<WordTokenizer>();
  throw Error(ErrorCode::UnknownTokenizer, "unknown tokenizer '" + std::string(name) + "' (chars, bytes, words)");
}

std::vector<std::string> tokenizer_names() { return {"chars", "bytes", "words"}; }

void RunningStats::add(double x) noexcept {
  ++n_;
  sum_ += x;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(n_);
  m2_ += delta * (x - mean_);
}

void RunningStats::merge(const RunningStats& o) noexcept {
  if (o.n_ == 0) return;
  if (n_ == 0) {
    *this = o;
    return;
  }
  const double n = static_cast<double>(n_ + o.n_);
  const double delta = o.mean_ - mean_;
  mean_ += delta * static_cast<double>(o.n_) / n;
  m2_ += o.m2_ + delta * delta * static_cast<double>(n_) * static_cast<double>(o.n_) / n;
  n_ += o.n_;
  sum_ += o.sum_;
}

double RunningStats::stddev() const noexcept {
  return n_ ? std::sqrt(std::max(0.0, m2_ / static_cast<double>(n_))) : 0.0;
}

void TokenStatsAccumulator::add(std::string_view text) {
  auto take = [&](std::string_view piece) {
    const std::size_t n = tokenizer_.count(piece);
    stats_.add(static_cast<double>(n));
    total_ += n;
  };
  if (split_max_ && utf8_length(text) > *split_max_) {
    for (const auto& piece : split_long(text, *split_max_).pieces) take(piece);
  } else {
    take(text);
  }
}

void TokenStatsAccumulator::merge(const TokenStatsAccumulator& o) {
  stats_.merge(o.stats_);
  total_ += o.total_;
}

TokenStatsReport TokenStatsAccumulator::report() const {
  if (stats_.count() == 0) throw Error(ErrorCode::EmptyCorpus, "no samples to measure");
  return {std::string(tokenizer_.name()), stats_.count(), stats_.mean(), stats_.stddev(), total_,
          tokenizer_.render(kProbeSentence)};
}

TokenStatsReport compute_stats(const std::vector<TextSample>& corpus, const Tokenizer& tokenizer,
                               std::optional<std::size_t> split_max) {
  TokenStatsAccumulator acc(tokenizer, split_max);
  for (const auto& s : corpus) acc.add(s.text);
  return acc.report();
}

std::string render_stats(const std::vector<TokenStatsReport>& reports) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-10s %9s %22s %14s  %s\n", "Tokenizer", "Samples", "Sample length",
                "Tokens, x10^6", "Tokenization example");
  out << line;
  for (const auto& r : reports) {
    char length[64];
    std::snprintf(length, sizeof length, "%.1f ± %.1f", r.mean, r.stddev);
    // "±" is two bytes but one column.
    std::snprintf(line, sizeof line, "%-10s %9zu %23s %14.6f  %s\n", r.tokenizer.c_str(), r.samples, length,
                  static_cast<double>(r.total_tokens) / 1e6, r.example.c_str());
    out << line;
  }
  return out.str();
}

std::string stats_to_json(const std::vector<TokenStatsReport>& reports) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["tokenizer"] = r.tokenizer;
    j["samples"] = r.samples;
    j["mean"] = r.mean;
    j["std"] = r.stddev;
    j["total_tokens"] = r.total_tokens;
    j["example"] = r.example;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

}  // namespace litgec
