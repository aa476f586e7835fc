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

#include <algorithm>
#include <sstream>

#include "litgec/error.hpp"
#include "litgec/keyboard.hpp"

using namespace litgec;

namespace {
bool has(const std::vector<KeyNeighbor>& list, char32_t c) {
  return std::any_of(list.begin(), list.end(), [c](const KeyNeighbor& n) { return n.ch == c; });
}
}  // namespace

TEST(Keyboard, EveryLowercaseLetterHasNeighbours) {
  const auto kbd = KeyboardModel::qwerty();
  for (char32_t c = U'a'; c <= U'z'; ++c) {
    const auto n = kbd.neighbors(c);
    EXPECT_GE(n.size(), 2u) << static_cast<char>(c);
    for (const auto& k : n) EXPECT_GE(k.weight, 0.0);
  }
}

TEST(Keyboard, UsesRowAndDiagonalAdjacency) {
  const auto kbd = KeyboardModel::qwerty();
  const auto s = kbd.neighbors(U's');
  for (const char32_t c : std::u32string_view(U"adwezx")) EXPECT_TRUE(has(s, c)) << static_cast<char>(c);
  EXPECT_FALSE(has(s, U'q'));
  EXPECT_FALSE(has(s, U'c'));
  EXPECT_TRUE(has(kbd.neighbors(U'p'), U'o'));
  EXPECT_FALSE(has(kbd.neighbors(U'p'), U'b'));
}

TEST(Keyboard, CapitalsAndDiacriticsBorrowNeighbours) {
  const auto kbd = KeyboardModel::qwerty();
  EXPECT_TRUE(has(kbd.neighbors(U'S'), U'A'));
  EXPECT_TRUE(has(kbd.neighbors(U'š'), U'a'));
  EXPECT_TRUE(has(kbd.neighbors(U'Ž'), U'X'));
  EXPECT_TRUE(kbd.neighbors(U'Ω').empty());
}

TEST(Keyboard, WeightFileReplacesNeighbourLists) {
  auto kbd = KeyboardModel::qwerty();
  std::istringstream in("# p is often hit as b\np b 3\np o 1\nSPACE n 2\n");
  kbd.apply_weights(in);
  EXPECT_EQ(kbd.neighbors(U'p'), (std::vector<KeyNeighbor>{{U'b', 3.0}, {U'o', 1.0}}));
  EXPECT_EQ(kbd.neighbors(U' '), (std::vector<KeyNeighbor>{{U'n', 2.0}}));
  EXPECT_TRUE(has(kbd.neighbors(U'a'), U's'));
  EXPECT_TRUE(has(kbd.neighbors(U'P'), U'B'));
}

TEST(Keyboard, RejectsMalformedWeights) {
  for (const std::string bad : {"p b\n", "p b x\n", "pp b 1\n", "p b -1\n"}) {
    auto kbd = KeyboardModel::qwerty();
    std::istringstream in(bad);
    EXPECT_THROW(kbd.apply_weights(in), Error) << bad;
  }
}

TEST(Keyboard, CharsetCoversNeighbours) {
  const auto kbd = KeyboardModel::qwerty();
  const auto cs = kbd.charset();
  for (const char32_t c : std::u32string_view(U"azAZ09,.")) EXPECT_NE(cs.find(c), std::u32string::npos);
}
