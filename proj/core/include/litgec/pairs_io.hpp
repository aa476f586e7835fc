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

// JSON-lines parallel corpus: one object per pair with fields id, source,
// target and edits, where edits is an array of
// [start, end, replacement, category] tuples in source code points.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "litgec/edit.hpp"

namespace litgec {

std::string to_json_line(const ParallelPair& pair);

/// Throws Error(ParseError) naming `line_no` for malformed objects, unknown
/// categories or edits that do not turn source into target.
ParallelPair pair_from_json_line(const std::string& line, std::size_t line_no);

class PairReader {
 public:
  explicit PairReader(std::istream& in) : in_(in) {}
  /// Next pair, skipping blank lines; nullopt at end of stream.
  std::optional<ParallelPair> next();

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

std::vector<ParallelPair> read_pairs(std::istream& in);
std::vector<ParallelPair> read_pairs(const std::filesystem::path& path);
void write_pairs(std::ostream& out, const std::vector<ParallelPair>& pairs);
void write_pairs(const std::filesystem::path& path, const std::vector<ParallelPair>& pairs);

}  // namespace litgec
