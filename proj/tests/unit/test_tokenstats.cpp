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

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <random>

#include "fixtures.hpp"
#include "litgec/error.hpp"
#include "litgec/tokenstats.hpp"
#include "oracles.hpp"

using namespace litgec;

namespace {

// Code points are the bytes that do not continue a UTF-8 sequence.
std::size_t count_lead_bytes(std::string_view s) {
  std::size_t n = 0;
  for (const unsigned char c : s) n += (c & 0xC0) != 0x80;
  return n;
}

std::vector<TextSample> corpus_of(std::initializer_list<std::string> texts) {
  std::vector<TextSample> out;
  for (const auto& t : texts) out.push_back({std::to_string(out.size()), t});
  return out;
}

}  // namespace

TEST(Tokenize, ProbeSentence) {
  EXPECT_EQ(tokenize_chars(kProbeSentence).size(), 21u);
  EXPECT_EQ(tokenize_bytes(kProbeSentence).size(), 25u);
  EXPECT_EQ(tokenize_words(kProbeSentence), (std::vector<std::string>{"Lietuva", "graži", "šalis"}));
  EXPECT_EQ(make_tokenizer("bytes")->render(kProbeSentence), "Lietuva \\xe2\\x80\\x93 gra\\xc5\\xbei \\xc5\\xa1alis");
  EXPECT_EQ(make_tokenizer("words")->render(kProbeSentence), "[Lietuva] [graži] [šalis]");
  EXPECT_EQ(make_tokenizer("chars")->render(kProbeSentence), kProbeSentence);
}

TEST(Tokenize, SmallCases) {
  EXPECT_EQ(tokenize_chars("abc").size(), 3u);
  EXPECT_TRUE(tokenize_chars("").empty());
  EXPECT_EQ(tokenize_bytes("ž").size(), 2u);
  EXPECT_EQ(tokenize_bytes("hello").size(), 5u);
  EXPECT_EQ(tokenize_words("a b"), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(tokenize_words("kur?"), (std::vector<std::string>{"kur"}));
  EXPECT_EQ(tokenize_words("„labas“ , – x"), (std::vector<std::string>{"labas", "x"}));
  EXPECT_THROW(tokenize_chars("\xff"), Error);
}

TEST(Tokenize, CountsMatchEncodingOracle) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto text = litgec::testing::messy_text(seed, 80);
    EXPECT_EQ(tokenize_chars(text).size(), count_lead_bytes(text));
    EXPECT_EQ(tokenize_bytes(text).size(), text.size());
    EXPECT_GE(tokenize_bytes(text).size(), tokenize_chars(text).size());
  }
}

TEST(Tokenize, Registry) {
  EXPECT_EQ(tokenizer_names(), (std::vector<std::string>{"chars", "bytes", "words"}));
  try {
    make_tokenizer("bpe");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownTokenizer);
  }
}

TEST(Stats, HandExamples) {
  const auto chars = make_tokenizer("chars");
  auto r = compute_stats(corpus_of({"abc"}), *chars);
  EXPECT_EQ(r.samples, 1u);
  EXPECT_DOUBLE_EQ(r.mean, 3.0);
  EXPECT_DOUBLE_EQ(r.stddev, 0.0);
  EXPECT_EQ(r.total_tokens, 3u);
  r = compute_stats(corpus_of({"ab", "abcd"}), *chars);
  EXPECT_DOUBLE_EQ(r.mean, 3.0);
  EXPECT_DOUBLE_EQ(r.stddev, 1.0);
  EXPECT_EQ(r.total_tokens, 6u);
  EXPECT_EQ(r.tokenizer, "chars");
  EXPECT_EQ(r.example, std::string(kProbeSentence));
  try {
    compute_stats({}, *chars);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyCorpus);
  }
}

TEST(Stats, MatchesTwoPassOracle) {
  const auto corpus = litgec::testing::synthetic_corpus(500, 3, 1, 8);
  for (const auto& name : tokenizer_names()) {
    const auto tok = make_tokenizer(name);
    std::vector<double> lengths;
    std::size_t total = 0;
    for (const auto& s : corpus) {
      lengths.push_back(static_cast<double>(tok->count(s.text)));
      total += tok->count(s.text);
    }
    const auto oracle = litgec::testing::two_pass(lengths);
    const auto r = compute_stats(corpus, *tok);
    EXPECT_NEAR(r.mean, oracle.mean, 1e-9 * oracle.mean) << name;
    EXPECT_NEAR(r.stddev, oracle.stddev, 1e-9 * (1 + oracle.stddev)) << name;
    EXPECT_EQ(r.total_tokens, total);
  }
}

TEST(Stats, MergeIsOrderIndependent) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> x(0, 1000);
  std::vector<double> xs(2000);
  for (auto& v : xs) v = x(gen);
  RunningStats whole, a, b, c;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    whole.add(xs[k]);
    (k % 3 == 0 ? a : k % 3 == 1 ? b : c).add(xs[k]);
  }
  RunningStats ab = a, ba = b;
  ab.merge(b);
  ab.merge(c);
  ba.merge(c);
  ba.merge(a);
  for (const auto* m : {&ab, &ba}) {
    EXPECT_EQ(m->count(), whole.count());
    EXPECT_NEAR(m->mean(), whole.mean(), 1e-9);
    EXPECT_NEAR(m->stddev(), whole.stddev(), 1e-9);
  }
  const auto oracle = litgec::testing::two_pass(xs);
  EXPECT_NEAR(whole.stddev(), oracle.stddev, 1e-9);
  RunningStats empty;
  empty.merge(whole);
  EXPECT_NEAR(empty.mean(), whole.mean(), 1e-12);
}

TEST(Stats, SplittingCountsEveryPiece) {
  const auto chars = make_tokenizer("chars");
  const std::string text(25, 'a');
  const auto r = compute_stats(corpus_of({text}), *chars, 10);
  EXPECT_EQ(r.samples, 3u);
  EXPECT_EQ(r.total_tokens, 25u);
}

TEST(Stats, RenderAndJson) {
  const auto corpus = corpus_of({"Lietuva – graži šalis", "Labas"});
  std::vector<TokenStatsReport> reports;
  for (const auto& name : tokenizer_names()) reports.push_back(compute_stats(corpus, *make_tokenizer(name)));
  const auto table = render_stats(reports);
  for (const auto& name : tokenizer_names()) EXPECT_NE(table.find(name), std::string::npos);
  EXPECT_NE(table.find("[graži]"), std::string::npos);
  const auto j = nlohmann::json::parse(stats_to_json(reports));
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0]["tokenizer"], "chars");
  EXPECT_EQ(j[0]["total_tokens"], 26);
  EXPECT_EQ(j[2]["total_tokens"], 4);
}
