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

#include "litgec/pairs_io.hpp"

#include <fstream>
#include <istream>
#include <nlohmann/json.hpp>
#include <ostream>

#include "litgec/error.hpp"
#include "litgec/text.hpp"

namespace litgec {

using ordered_json = nlohmann::ordered_json;

std::string to_json_line(const ParallelPair& pair) {
  ordered_json j;
  j["id"] = pair.id;
  j["source"] = pair.source;
  j["target"] = pair.target;
  auto edits = ordered_json::array();
  for (const auto& e : pair.gold_edits) {
    edits.push_back(ordered_json::array({e.src_start, e.src_end, e.replacement, to_string(e.category)}));
  }
  j["edits"] = std::move(edits);
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::strict);
}

ParallelPair pair_from_json_line(const std::string& line, std::size_t line_no) {
  const auto where = "line " + std::to_string(line_no) + ": ";
  if (!is_valid_utf8(line)) throw Error(ErrorCode::InvalidUtf8, where + "invalid UTF-8");
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, where + e.what());
  }
  auto text_field = [&](const char* key) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_string()) {
      throw Error(ErrorCode::ParseError, where + "missing string field \"" + key + "\"");
    }
    return j[key].get<std::string>();
  };
  ParallelPair p;
  p.source = text_field("source");
  p.target = text_field("target");
  if (j.contains("id") && j["id"].is_string()) {
    p.id = j["id"].get<std::string>();
  } else if (j.contains("id") && j["id"].is_number_integer()) {
    p.id = std::to_string(j["id"].get<long long>());
  } else {
    p.id = std::to_string(line_no);
  }
  if (j.contains("edits")) {
    if (!j["edits"].is_array()) throw Error(ErrorCode::ParseError, where + "\"edits\" must be an array");
    for (const auto& e : j["edits"]) {
      if (!e.is_array() || e.size() != 4 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned() ||
          !e[2].is_string() || !e[3].is_string()) {
        throw Error(ErrorCode::ParseError, where + "edit must be [start, end, replacement, category]");
      }
      const auto cat = category_from_string(e[3].get<std::string>());
      if (!cat) throw Error(ErrorCode::ParseError, where + "unknown category " + e[3].dump());
      p.gold_edits.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>(), e[2].get<std::string>(), *cat});
    }
  }
  try {
    if (apply_edits(p.source, p.gold_edits) != p.target) {
      throw Error(ErrorCode::ParseError, where + "edits do not turn source into target");
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    throw Error(ErrorCode::ParseError, where + e.what());
  }
  return p;
}

std::optional<ParallelPair> PairReader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (trim(std::string_view(line)).empty()) continue;
    return pair_from_json_line(line, line_);
  }
  return std::nullopt;
}

std::vector<ParallelPair> read_pairs(std::istream& in) {
  PairReader reader(in);
  std::vector<ParallelPair> out;
  while (auto p = reader.next()) out.push_back(std::move(*p));
  return out;
}

std::vector<ParallelPair> read_pairs(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return read_pairs(in);
}

void write_pairs(std::ostream& out, const std::vector<ParallelPair>& pairs) {
  for (const auto& p : pairs) out << to_json_line(p) << '\n';
}

void write_pairs(const std::filesystem::path& path, const std::vector<ParallelPair>& pairs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  write_pairs(out, pairs);
}

}  // namespace litgec
