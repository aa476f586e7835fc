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

#include "litgec/corpus_io.hpp"

#include <fstream>
#include <istream>
#include <nlohmann/json.hpp>

#include "litgec/error.hpp"
#include "litgec/text.hpp"

namespace litgec {

using ordered_json = nlohmann::ordered_json;

CorpusFormat guess_format(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".jsonl" || ext == ".ndjson" || ext == ".json") return CorpusFormat::JsonLines;
  return CorpusFormat::PlainText;
}

SampleReader::SampleReader(std::istream& in, CorpusFormat format)
    : in_(in), format_(format) {}

std::optional<TextSample> SampleReader::next() {
  return format_ == CorpusFormat::JsonLines ? next_json() : next_paragraph();
}

std::optional<TextSample> SampleReader::next_json() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (trim(std::string_view(line)).empty()) continue;
    return sample_from_json_line(line, line_);
  }
  return std::nullopt;
}

std::optional<TextSample> SampleReader::next_paragraph() {
  std::string paragraph;
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (!is_valid_utf8(line)) {
      throw Error(ErrorCode::InvalidUtf8, "line " + std::to_string(line_) + ": invalid UTF-8");
    }
    const auto body = trim(std::string_view(line));
    if (body.empty()) {
      if (!paragraph.empty()) break;
      continue;
    }
    if (!paragraph.empty()) paragraph.push_back(' ');
    paragraph.append(body);
  }
  if (paragraph.empty()) return std::nullopt;
  return TextSample{std::to_string(++paragraphs_), std::move(paragraph), std::nullopt};
}

std::string to_json_line(const TextSample& sample) {
  ordered_json j;
  j["id"] = sample.id;
  j["text"] = sample.text;
  if (sample.source) j["source"] = *sample.source;
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::strict);
}

TextSample sample_from_json_line(const std::string& line, std::size_t line_no) {
  const auto where = "line " + std::to_string(line_no) + ": ";
  if (!is_valid_utf8(line)) throw Error(ErrorCode::InvalidUtf8, where + "invalid UTF-8");
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, where + e.what());
  }
  if (!j.is_object() || !j.contains("text") || !j["text"].is_string()) {
    throw Error(ErrorCode::ParseError, where + "expected an object with a string \"text\"");
  }
  TextSample s;
  if (j.contains("id")) {
    const auto& id = j["id"];
    if (id.is_string()) {
      s.id = id.get<std::string>();
    } else if (id.is_number_integer()) {
      s.id = std::to_string(id.get<long long>());
    } else {
      throw Error(ErrorCode::ParseError, where + "\"id\" must be a string or integer");
    }
  } else {
    s.id = std::to_string(line_no);
  }
  s.text = j["text"].get<std::string>();
  if (j.contains("source") && j["source"].is_string()) s.source = j["source"].get<std::string>();
  return s;
}

std::vector<TextSample> read_samples(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  SampleReader reader(in, guess_format(path));
  std::vector<TextSample> out;
  while (auto s = reader.next()) out.push_back(std::move(*s));
  return out;
}

void write_samples(const std::filesystem::path& path, const std::vector<TextSample>& samples) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  for (const auto& s : samples) out << to_json_line(s) << '\n';
}

}  // namespace litgec
