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

#include <random>

#include "litgec/align.hpp"
#include "litgec/error.hpp"
#include "litgec/text.hpp"
#include "oracles.hpp"

using namespace litgec;
using litgec::testing::bfs_distance;
using litgec::testing::brute_force_distance;
using litgec::testing::full_table_distance;

namespace {

std::u32string random_string(std::mt19937_64& rng, std::u32string_view alphabet, std::size_t max_len) {
  std::u32string s(rng() % (max_len + 1), U' ');
  for (auto& c : s) c = alphabet[rng() % alphabet.size()];
  return s;
}

std::u32string mutate(std::mt19937_64& rng, std::u32string s, std::size_t edits, std::u32string_view alphabet) {
  for (std::size_t k = 0; k < edits; ++k) {
    const auto op = rng() % 4;
    const std::size_t pos = s.empty() ? 0 : rng() % s.size();
    const char32_t c = alphabet[rng() % alphabet.size()];
    if (op == 0 || s.empty()) {
      s.insert(s.begin() + static_cast<std::ptrdiff_t>(pos), c);
    } else if (op == 1) {
      s.erase(pos, 1);
    } else if (op == 2) {
      s[pos] = c;
    } else if (pos + 1 < s.size()) {
      std::swap(s[pos], s[pos + 1]);
    }
  }
  return s;
}

}  // namespace

TEST(Align, IdenticalStringsAreAllMatches) {
  const auto script = align(std::string_view("abc"), std::string_view("abc"));
  EXPECT_EQ(script.cost, 0u);
  ASSERT_EQ(script.ops.size(), 3u);
  for (const auto& op : script.ops) EXPECT_EQ(op.kind, AlignOpKind::Match);
}

TEST(Align, SubstitutionAtOffset) {
  const auto script = align(std::string_view("dirpti"), std::string_view("dirbti"));
  EXPECT_EQ(script.cost, 1u);
  std::size_t subs = 0;
  for (const auto& op : script.ops) {
    if (op.kind == AlignOpKind::Substitute) {
      ++subs;
      EXPECT_EQ(op.src_pos, 3u);
      EXPECT_EQ(op.src, U"p");
      EXPECT_EQ(op.tgt, U"b");
    }
  }
  EXPECT_EQ(subs, 1u);
}

TEST(Align, AdjacentSwapIsOneTransposition) {
  const auto script = align(std::string_view("ab"), std::string_view("ba"));
  EXPECT_EQ(script.cost, 1u);
  ASSERT_EQ(script.ops.size(), 1u);
  EXPECT_EQ(script.ops[0].kind, AlignOpKind::Transpose);
}

TEST(Align, GappedTranspositionCostsGapPlusOne) {
  // "ca" -> "abc": swap with an insertion between the halves, cost 2 (the
  // restricted variant would need 3).
  EXPECT_EQ(edit_distance(std::u32string_view(U"ca"), std::u32string_view(U"abc")), 2u);
  const auto script = align(std::u32string_view(U"ca"), std::u32string_view(U"abc"));
  EXPECT_EQ(script.replay(U"ca"), U"abc");
}

TEST(Align, EmptyInputs) {
  EXPECT_EQ(edit_distance(std::u32string_view(U""), std::u32string_view(U"")), 0u);
  EXPECT_EQ(edit_distance(std::u32string_view(U""), std::u32string_view(U"abc")), 3u);
  EXPECT_EQ(edit_distance(std::u32string_view(U"ąčę"), std::u32string_view(U"")), 3u);
}

TEST(Align, TieBreakPrefersEarlierOperationKinds) {
  // "ab" -> "b": delete at 0 beats any later choice; "a" -> "ab" inserts.
  auto s = align(std::u32string_view(U"xy"), std::u32string_view(U"yz"));
  EXPECT_EQ(s.cost, 2u);
  EXPECT_EQ(s.ops.front().kind, AlignOpKind::Substitute);
  s = align(std::u32string_view(U"a"), std::u32string_view(U"ab"));
  ASSERT_EQ(s.ops.size(), 2u);
  EXPECT_EQ(s.ops[0].kind, AlignOpKind::Match);
  EXPECT_EQ(s.ops[1].kind, AlignOpKind::Insert);
}

TEST(Align, MatchesBruteForceOracle) {
  std::mt19937_64 rng(2024);
  const std::u32string alphabet = U"abą ";
  for (int round = 0; round < 1500; ++round) {
    const auto a = random_string(rng, alphabet, 12);
    const auto b = random_string(rng, alphabet, 12);
    ASSERT_EQ(edit_distance(std::u32string_view(a), std::u32string_view(b)), brute_force_distance(a, b))
        << utf8_encode(a) << " | " << utf8_encode(b);
  }
}

TEST(Align, MatchesShortestOperationSequence) {
  std::mt19937_64 rng(5);
  const std::u32string alphabet = U"abc";
  for (int round = 0; round < 300; ++round) {
    const auto a = random_string(rng, alphabet, 4);
    const auto b = random_string(rng, alphabet, 4);
    ASSERT_EQ(edit_distance(std::u32string_view(a), std::u32string_view(b)), bfs_distance(a, b))
        << utf8_encode(a) << " | " << utf8_encode(b);
  }
}

TEST(Align, BandedSearchEqualsFullTableOnLongInputs) {
  std::mt19937_64 rng(99);
  const std::u32string alphabet = U"abcdeąčę ";
  for (int round = 0; round < 60; ++round) {
    const auto a = random_string(rng, alphabet, 400);
    const std::size_t edits = (round % 3 == 0) ? a.size() : 1 + rng() % 20;
    const auto b = mutate(rng, a, edits, alphabet);
    ASSERT_EQ(edit_distance(std::u32string_view(a), std::u32string_view(b)), full_table_distance(a, b));
  }
  // Unrelated strings force the band to cover the whole table.
  for (int round = 0; round < 20; ++round) {
    const auto a = random_string(rng, alphabet, 300);
    const auto b = random_string(rng, alphabet, 300);
    ASSERT_EQ(edit_distance(std::u32string_view(a), std::u32string_view(b)), full_table_distance(a, b));
  }
}

TEST(Align, CostIsSymmetric) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 500; ++round) {
    const auto a = random_string(rng, U"abą ", 10);
    const auto b = random_string(rng, U"abą ", 10);
    EXPECT_EQ(edit_distance(std::u32string_view(a), std::u32string_view(b)),
              edit_distance(std::u32string_view(b), std::u32string_view(a)));
  }
}

TEST(Align, SatisfiesTriangleInequality) {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 1000; ++round) {
    const auto a = random_string(rng, U"abą ", 10);
    const auto b = random_string(rng, U"abą ", 10);
    const auto c = random_string(rng, U"abą ", 10);
    const auto ab = edit_distance(std::u32string_view(a), std::u32string_view(b));
    const auto bc = edit_distance(std::u32string_view(b), std::u32string_view(c));
    const auto ac = edit_distance(std::u32string_view(a), std::u32string_view(c));
    ASSERT_LE(ac, ab + bc);
  }
}

TEST(Align, ScriptReplaysAndCostsAddUp) {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 1000; ++round) {
    const auto a = random_string(rng, U"abcą ", 15);
    const auto b = mutate(rng, a, rng() % 6, U"abcą ");
    const auto script = align(std::u32string_view(a), std::u32string_view(b));
    ASSERT_EQ(script.replay(a), b);
    std::size_t sum = 0;
    for (const auto& op : script.ops) sum += op.cost();
    ASSERT_EQ(sum, script.cost);
    ASSERT_EQ(script.cost, edit_distance(std::u32string_view(a), std::u32string_view(b)));
  }
}

TEST(Align, IsDeterministic) {
  const auto x = align(std::string_view("keiktųsi, pyktųsi"), std::string_view("keiktųsi byktųsi"));
  const auto y = align(std::string_view("keiktųsi, pyktųsi"), std::string_view("keiktųsi byktųsi"));
  EXPECT_EQ(x.ops, y.ops);
}

TEST(Align, ReplayRejectsForeignInput) {
  const auto script = align(std::u32string_view(U"abc"), std::u32string_view(U"abd"));
  EXPECT_THROW(script.replay(U"xyz"), Error);
}

TEST(ExtractEdits, IdenticalStringsHaveNoEdits) {
  EXPECT_TRUE(extract_edits(std::string_view("namas"), std::string_view("namas")).empty());
}

TEST(ExtractEdits, RemovesInsertedSpace) {
  const auto edits = extract_edits(std::string_view("atle isime"), std::string_view("atleisime"));
  ASSERT_EQ(edits.size(), 1u);
  EXPECT_EQ(edits[0].src_start, 4u);
  EXPECT_EQ(edits[0].src_end, 5u);
  EXPECT_EQ(edits[0].replacement, "");
}

TEST(ExtractEdits, SeparatesDistantChanges) {
  const auto edits =
      extract_edits(std::string_view("nuspr-endė keisti gyvenimą tai"), std::string_view("nusprendė keisti gyvenimą, tai"));
  ASSERT_EQ(edits.size(), 2u);
  EXPECT_EQ(edits[0], (Edit{5, 6, "", ErrorCategory::Other}));
  EXPECT_EQ(edits[1], (Edit{26, 26, ",", ErrorCategory::Other}));
}

TEST(ExtractEdits, AlwaysRoundTrips) {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 2000; ++round) {
    const auto a = random_string(rng, U"abcąž .,", 20);
    const auto b = round % 2 ? mutate(rng, a, rng() % 8, U"abcąž .,") : random_string(rng, U"abcąž .,", 20);
    const auto edits = extract_edits(std::u32string_view(a), std::u32string_view(b));
    ASSERT_EQ(apply_edits(std::u32string_view(a), edits), b);
    for (std::size_t k = 1; k < edits.size(); ++k) ASSERT_LT(edits[k - 1].src_end, edits[k].src_start);
  }
}
