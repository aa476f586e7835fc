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

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "litgec/corpus.hpp"

namespace litgec {

enum class CorpusFormat {
  JsonLines,  // {"id": ..., "text": ..., "source": ...} per line
  PlainText,  // paragraphs separated by blank lines
};

/// .jsonl / .ndjson / .json select JSON lines, anything else plain text.
CorpusFormat guess_format(const std::filesystem::path& path);

/// Streams samples one at a time. Plain-text paragraphs have their lines
/// joined with a single space and get sequential ids starting at "1".
class SampleReader {
 public:
  SampleReader(std::istream& in, CorpusFormat format);

  std::optional<TextSample> next();

  /// 1-based number of the last line consumed.
  std::size_t line() const noexcept { return line_; }

 private:
  std::optional<TextSample> next_json();
  std::optional<TextSample> next_paragraph();

  std::istream& in_;
  CorpusFormat format_;
  std::size_t line_ = 0;
  std::size_t paragraphs_ = 0;
};

std::string to_json_line(const TextSample& sample);
TextSample sample_from_json_line(const std::string& line, std::size_t line_no);

std::vector<TextSample> read_samples(const std::filesystem::path& path);
void write_samples(const std::filesystem::path& path, const std::vector<TextSample>& samples);

}  // namespace litgec
