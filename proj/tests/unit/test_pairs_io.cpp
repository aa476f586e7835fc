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

#include <filesystem>
#include <sstream>

#include "litgec/align.hpp"
#include "litgec/error.hpp"
#include "litgec/pairs_io.hpp"

using namespace litgec;

TEST(PairsIo, FieldLayout) {
  const ParallelPair p{"3", "labaz", "labas", {{4, 5, "s", ErrorCategory::Typographical}}};
  EXPECT_EQ(to_json_line(p),
            R"({"id":"3","source":"labaz","target":"labas","edits":[[4,5,"s","Typographical"]]})");
  EXPECT_EQ(pair_from_json_line(to_json_line(p), 1), p);
}

TEST(PairsIo, StreamRoundTrip) {
  std::vector<ParallelPair> pairs;
  for (int k = 0; k < 50; ++k) {
    const std::string src = "ėjo „" + std::to_string(k) + "“ namo";
    const std::string tgt = "ėjo " + std::to_string(k * 7) + " namo.";
    auto edits = extract_edits(src, tgt);
    for (auto& e : edits) e.category = ErrorCategory::Punctuation;
    pairs.push_back({std::to_string(k), src, tgt, edits});
  }
  std::stringstream io;
  write_pairs(io, pairs);
  EXPECT_EQ(read_pairs(io), pairs);

  const auto path = std::filesystem::temp_directory_path() / "litgec_pairs_io_test.jsonl";
  write_pairs(path, pairs);
  EXPECT_EQ(read_pairs(path), pairs);
  std::filesystem::remove(path);
}

TEST(PairsIo, ReaderSkipsBlankLines) {
  std::istringstream in("\n" R"({"id":"a","source":"x","target":"x","edits":[]})" "\n\n");
  PairReader reader(in);
  const auto first = reader.next();
  ASSERT_TRUE(first.has_value());
  EXPECT_EQ(first->id, "a");
  EXPECT_FALSE(reader.next().has_value());
}

TEST(PairsIo, RejectsBadRecords) {
  const std::vector<std::string> bad = {
      "not json",
      R"({"id":"a","source":"x","target":"y","edits":[]})",
      R"({"id":"a","source":"x","target":"y","edits":[[0,1,"y","Bogus"]]})",
      R"({"id":"a","source":"x","target":"y","edits":[[0,5,"y","Typographical"]]})",
      R"({"id":"a","source":"x","edits":[]})",
  };
  for (const auto& line : bad) {
    std::istringstream in(R"({"id":"ok","source":"x","target":"x","edits":[]})" "\n" + line + "\n");
    try {
      read_pairs(in);
      ADD_FAILURE() << line;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError);
      EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
    }
  }
  EXPECT_THROW(read_pairs(std::filesystem::path("/nonexistent/pairs.jsonl")), Error);
}
