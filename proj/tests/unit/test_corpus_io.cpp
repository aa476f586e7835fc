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

#include <sstream>

#include "litgec/corpus_io.hpp"
#include "litgec/error.hpp"

using namespace litgec;

TEST(CorpusIo, JsonLineRoundTrip) {
  const TextSample s{"a-1", "„Kabutės“ ir \"escape\"\nnauja eilutė", std::string("lrt.lt")};
  const auto line = to_json_line(s);
  EXPECT_EQ(line.find('\n'), std::string::npos);
  const auto back = sample_from_json_line(line, 1);
  EXPECT_EQ(back.id, s.id);
  EXPECT_EQ(back.text, s.text);
  EXPECT_EQ(back.source, s.source);
}

TEST(CorpusIo, FieldOrderIsStable) {
  EXPECT_EQ(to_json_line(TextSample{"1", "x", std::nullopt}), R"({"id":"1","text":"x"})");
}

TEST(CorpusIo, AcceptsIntegerAndMissingIds) {
  EXPECT_EQ(sample_from_json_line(R"({"id": 12, "text": "x"})", 3).id, "12");
  EXPECT_EQ(sample_from_json_line(R"({"text": "x"})", 3).id, "3");
}

TEST(CorpusIo, ReportsLineNumbers) {
  std::istringstream in("{\"text\": \"a\"}\n\n{\"text\": 5}\n");
  SampleReader reader(in, CorpusFormat::JsonLines);
  ASSERT_TRUE(reader.next());
  try {
    reader.next();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(CorpusIo, RejectsBrokenJson) {
  EXPECT_THROW(sample_from_json_line("{oops", 1), Error);
  EXPECT_THROW(sample_from_json_line("[1,2]", 1), Error);
}

TEST(CorpusIo, PlainTextSplitsParagraphs) {
  std::istringstream in("Pirma pastraipa\ntęsiasi čia.\n\n\n  Antra.  \n");
  SampleReader reader(in, CorpusFormat::PlainText);
  const auto a = reader.next();
  const auto b = reader.next();
  ASSERT_TRUE(a && b);
  EXPECT_FALSE(reader.next());
  EXPECT_EQ(a->id, "1");
  EXPECT_EQ(a->text, "Pirma pastraipa tęsiasi čia.");
  EXPECT_EQ(b->id, "2");
  EXPECT_EQ(b->text, "Antra.");
}

TEST(CorpusIo, GuessesFormatFromExtension) {
  EXPECT_EQ(guess_format("a.jsonl"), CorpusFormat::JsonLines);
  EXPECT_EQ(guess_format("a.txt"), CorpusFormat::PlainText);
}
