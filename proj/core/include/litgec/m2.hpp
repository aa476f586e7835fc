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

// M2-style interchange. Each block is
//
//   # <id>                                   (optional)
//   S <source>
//   A <start> <end>|||<category>|||<replacement>|||<annotator>
//
// with character offsets into the source, blocks separated by a blank line,
// and "A -1 -1|||noop|||-NONE-|||0" for a pair without edits. The target is
// not stored; it is rebuilt from the source and the edits.

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "litgec/edit.hpp"

namespace litgec {

/// Throws Error(InvalidInput) for texts containing line breaks or
/// replacements containing "|||", which the format cannot carry.
void write_m2(std::ostream& out, const std::vector<ParallelPair>& pairs);
void write_m2(const std::filesystem::path& path, const std::vector<ParallelPair>& pairs);

/// Throws Error(ParseError) with the offending line number.
std::vector<ParallelPair> read_m2(std::istream& in);
std::vector<ParallelPair> read_m2(const std::filesystem::path& path);

}  // namespace litgec
