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

#include "fixtures.hpp"
#include "litgec/corpus.hpp"
#include "litgec/error.hpp"
#include "litgec/text.hpp"

using namespace litgec;
using litgec::testing::messy_text;
using litgec::testing::original_rows;

TEST(NormalizeQuotes, RewritesStraightQuotes) { EXPECT_EQ(normalize_quotes("\"ABC\""), "„ABC“"); }

TEST(NormalizeQuotes, LeavesTextWithoutQuotes) { EXPECT_EQ(normalize_quotes("be kabučių"), "be kabučių"); }

TEST(NormalizeQuotes, HandlesMixedStyles) {
  EXPECT_EQ(normalize_quotes("”A” ir ,,B``"), "„A“ ir „B“");
  EXPECT_EQ(normalize_quotes("‘‘x’’"), "„x“");
  EXPECT_EQ(normalize_quotes("“x”"), "„x“");
  EXPECT_EQ(normalize_quotes("``x''"), "„x“");
  EXPECT_EQ(normalize_quotes("„x“"), "„x“");
}

TEST(NormalizeQuotes, LeavesUnpairedQuote) {
  EXPECT_EQ(normalize_quotes("\"A\" ir \"B"), "„A“ ir \"B");
  EXPECT_EQ(normalize_quotes("5\" ekranas"), "5\" ekranas");
}

TEST(NormalizeQuotes, KeepsSingleApostrophesAndCommas) {
  EXPECT_EQ(normalize_quotes("O'Brien, ir"), "O'Brien, ir");
}

TEST(FixMissingSpace, SplitsDatesAndInitials) {
  EXPECT_EQ(fix_missing_space("1918m. vasario 16d."), "1918 m. vasario 16 d.");
  EXPECT_EQ(fix_missing_space("A.Sabonis"), "A. Sabonis");
  EXPECT_EQ(fix_missing_space("ir t.t."), "ir t. t.");
}

TEST(FixMissingSpace, LeavesOrdinaryText) {
  EXPECT_EQ(fix_missing_space("Lietuva.Tai"), "Lietuva.Tai");
  EXPECT_EQ(fix_missing_space("1918 m. vasario"), "1918 m. vasario");
  EXPECT_EQ(fix_missing_space("www.lrt.lt"), "www.lrt.lt");
  EXPECT_EQ(fix_missing_space("5md."), "5md.");
}

TEST(FixExtraSpace, RemovesSpaceBeforePunctuation) {
  EXPECT_EQ(fix_extra_space("tik darbui , visiškai pamirštant poilsį ,"), "tik darbui, visiškai pamirštant poilsį,");
  EXPECT_EQ(fix_extra_space("sveiki!"), "sveiki!");
  EXPECT_EQ(fix_extra_space("a ; b ?"), "a; b?");
  EXPECT_EQ(fix_extra_space("(taip )"), "(taip)");
}

TEST(Preprocess, ComposesAllThreeFixes) {
  EXPECT_EQ(clean_text("\"ABC\" , t.t."), "„ABC“, t. t.");
  EXPECT_EQ(clean_text(""), "");
  const auto s = preprocess(TextSample{"7", "A.Sabonis , 1918m.", std::string("web")});
  EXPECT_EQ(s.id, "7");
  EXPECT_EQ(s.text, "A. Sabonis, 1918 m.");
  EXPECT_EQ(s.source, "web");
}

TEST(Preprocess, LeavesPublishedOriginalsUnchanged) {
  for (const auto& row : original_rows()) EXPECT_EQ(clean_text(row), row);
}

TEST(Preprocess, IsIdempotentOnRandomText) {
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const auto x = messy_text(seed, 40);
    const auto once = clean_text(x);
    ASSERT_EQ(clean_text(once), once) << "input: " << x;
  }
}

namespace {
std::u32string letters_and_digits(std::string_view s) {
  std::u32string out;
  for (const char32_t c : utf8_decode(s)) {
    if (chars::is_letter(c) || chars::is_digit(c)) out.push_back(c);
  }
  return out;
}
}  // namespace

TEST(Preprocess, NeverTouchesLettersOrDigits) {
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const auto x = messy_text(seed, 60);
    EXPECT_EQ(letters_and_digits(normalize_quotes(x)), letters_and_digits(x));
    EXPECT_EQ(letters_and_digits(fix_missing_space(x)), letters_and_digits(x));
    EXPECT_EQ(letters_and_digits(fix_extra_space(x)), letters_and_digits(x));
  }
}

TEST(LetterFraction, Examples) {
  EXPECT_DOUBLE_EQ(letter_fraction("abc"), 1.0);
  EXPECT_DOUBLE_EQ(letter_fraction("ab¶c"), 0.75);
  EXPECT_DOUBLE_EQ(letter_fraction("šalis €"), 1.0);
  EXPECT_DOUBLE_EQ(letter_fraction(""), 1.0);
  EXPECT_DOUBLE_EQ(letter_fraction("   "), 1.0);
  EXPECT_DOUBLE_EQ(letter_fraction("ab¶c", U"¶"), 1.0);
  EXPECT_DOUBLE_EQ(letter_fraction("Ωx"), 0.5);
}

TEST(SpaceRatio, Examples) {
  EXPECT_DOUBLE_EQ(space_ratio("abcd"), 0.0);
  EXPECT_DOUBLE_EQ(space_ratio("ab cd"), 0.25);
  EXPECT_DOUBLE_EQ(space_ratio("http://x.lt/ilgas/kelias"), 0.0);
  EXPECT_DOUBLE_EQ(space_ratio(""), 0.0);
}

TEST(Ratios, StayInUnitInterval) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto x = messy_text(seed, 1 + seed % 30);
    const double lf = letter_fraction(x);
    const double sr = space_ratio(x);
    EXPECT_GE(lf, 0.0);
    EXPECT_LE(lf, 1.0);
    EXPECT_GE(sr, 0.0);
    EXPECT_LE(sr, 1.0);
  }
  EXPECT_LE(space_ratio(" a  "), 1.0);
}

TEST(Filter, RejectsShortText) {
  const auto v = filter(TextSample{"1", "trumpas tekstas", {}}, FilterConfig{});
  EXPECT_FALSE(v.keep);
  EXPECT_EQ(v.reason, FilterReason::TooShort);
}

TEST(Filter, KeepsOrdinaryProse) {
  const std::string text = "Vakar lijo, o šiandien saulėta";  // 30 chars, 4 spaces
  ASSERT_EQ(utf8_length(text), 30u);
  const auto v = filter(TextSample{"1", text, {}}, FilterConfig{});
  EXPECT_TRUE(v.keep);
  EXPECT_EQ(v.reason, FilterReason::Kept);
}

TEST(Filter, RejectsSpacelessUrlInMinimumMode) {
  const std::string url = "http://www.delfi.lt/ilgas/kelias";
  FilterConfig cfg;
  const auto v = filter(TextSample{"1", url, {}}, cfg);
  EXPECT_EQ(v, (FilterVerdict{false, FilterReason::SpaceRatio}));
  cfg.space_ratio_mode = SpaceRatioMode::Maximum;
  EXPECT_TRUE(filter(TextSample{"1", url, {}}, cfg).keep);
  EXPECT_FALSE(filter(TextSample{"1", "Vakar lijo, o šiandien saulėta", {}}, cfg).keep);
}

TEST(Filter, RejectsForeignText) {
  const auto v = filter(TextSample{"1", "Это предложение написано по-русски.", {}}, FilterConfig{});
  EXPECT_EQ(v.reason, FilterReason::LowLetterFraction);
}

TEST(Filter, ChecksRunInOrder) {
  // Short, foreign and spaceless at once: the length check wins.
  EXPECT_EQ(filter(TextSample{"1", "Это", {}}, FilterConfig{}).reason, FilterReason::TooShort);
}

TEST(FilterConfig, ValidatesRatios) {
  FilterConfig cfg;
  cfg.min_letter_fraction = 1.5;
  EXPECT_THROW(cfg.validate(), Error);
  cfg = FilterConfig{};
  cfg.space_ratio_bound = -0.1;
  EXPECT_THROW(cfg.validate(), Error);
}

TEST(Dedupe, KeepsFirstOccurrence) {
  const std::vector<TextSample> in = {{"1", "a", {}}, {"2", "b", {}}, {"3", "a", {}}};
  const auto out = dedupe(in);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].id, "1");
  EXPECT_EQ(out[1].id, "2");
  EXPECT_TRUE(dedupe({}).empty());
  const auto trimmed = dedupe({{"1", " x", {}}, {"2", "x ", {}}});
  ASSERT_EQ(trimmed.size(), 1u);
  EXPECT_EQ(trimmed[0].text, " x");
}

TEST(Dedupe, OutputHasUniqueTrimmedTexts) {
  std::vector<TextSample> in;
  for (int k = 0; k < 500; ++k) {
    in.push_back({std::to_string(k), std::string(k % 3, ' ') + std::to_string(k % 37) + std::string(k % 2, ' '), {}});
  }
  const auto out = dedupe(in);
  EXPECT_EQ(out.size(), 37u);
  std::set<std::string_view> texts;
  int last = -1;
  for (const auto& s : out) {
    EXPECT_TRUE(texts.insert(trim(std::string_view(s.text))).second);
    EXPECT_GT(std::stoi(s.id), last);
    last = std::stoi(s.id);
  }
}

TEST(SplitLong, ShortTextIsOnePiece) {
  const auto r = split_long("trumpas", 2100);
  ASSERT_EQ(r.pieces.size(), 1u);
  EXPECT_EQ(r.pieces[0], "trumpas");
  EXPECT_TRUE(r.separators.empty());
}

TEST(SplitLong, SplitsAtLastWhitespace) {
  std::string text;
  while (utf8_length(text) < 2101) text += "žodis ";
  text = utf8_encode(utf8_decode(text).substr(0, 2101));
  const auto r = split_long(text, 2100);
  ASSERT_EQ(r.pieces.size(), 2u);
  for (const auto& p : r.pieces) EXPECT_LE(utf8_length(p), 2100u);
  EXPECT_EQ(r.join(), text);
}

TEST(SplitLong, HardSplitsLongTokens) {
  const auto r = split_long("aaaa", 2);
  EXPECT_EQ(r.pieces, (std::vector<std::string>{"aa", "aa"}));
  EXPECT_EQ(r.separators, (std::vector<std::string>{""}));
  EXPECT_EQ(split_long("ab cd", 3).pieces, (std::vector<std::string>{"ab", "cd"}));
}

TEST(SplitLong, RejectsZeroLimit) {
  try {
    split_long("x", 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidInput);
  }
}

TEST(SplitLong, RoundTripsForEveryLimit) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto text = messy_text(seed, 120);
    for (std::size_t max = 1; max <= 50; ++max) {
      const auto r = split_long(text, max);
      ASSERT_EQ(r.join(), text) << "seed " << seed << " max " << max;
      ASSERT_EQ(r.separators.size() + 1, r.pieces.size());
      for (const auto& p : r.pieces) ASSERT_LE(utf8_length(p), max);
    }
  }
}
