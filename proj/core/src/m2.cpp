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

#include "litgec/m2.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "litgec/error.hpp"
#include "litgec/text.hpp"

namespace litgec {

namespace {

constexpr std::string_view kSep = "|||";

bool has_line_break(std::string_view s) {
  return s.find_first_of("\r\n") != std::string_view::npos;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::ParseError, "m2 line " + std::to_string(line_no) + ": " + what);
}

long long parse_offset(std::string_view s, std::size_t line_no) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) fail(line_no, "bad offset '" + std::string(s) + "'");
  return v;
}

struct Block {
  ParallelPair pair;
  bool has_source = false;
  bool noop = false;
  std::size_t first_line = 0;
};

void close_block(Block& b, std::vector<ParallelPair>& out, std::size_t& count) {
  if (!b.has_source) {
    if (!b.pair.id.empty()) fail(b.first_line, "id comment without an S line");
    return;
  }
  ++count;
  if (b.pair.id.empty()) b.pair.id = std::to_string(count);
  try {
    b.pair.target = apply_edits(b.pair.source, b.pair.gold_edits);
  } catch (const Error& e) {
    fail(b.first_line, e.what());
  }
  out.push_back(std::move(b.pair));
  b = Block{};
}

}  // namespace

void write_m2(std::ostream& out, const std::vector<ParallelPair>& pairs) {
  bool first = true;
  for (const auto& p : pairs) {
    if (has_line_break(p.source) || has_line_break(p.id)) {
      throw Error(ErrorCode::InvalidInput, "pair " + p.id + ": M2 cannot store line breaks");
    }
    if (!first) out << '\n';
    first = false;
    if (!p.id.empty()) out << "# " << p.id << '\n';
    out << "S " << p.source << '\n';
    if (p.gold_edits.empty()) {
      out << "A -1 -1|||noop|||-NONE-|||0\n";
      continue;
    }
    for (const auto& e : p.gold_edits) {
      if (has_line_break(e.replacement) || e.replacement.find(kSep) != std::string::npos) {
        throw Error(ErrorCode::InvalidInput, "pair " + p.id + ": replacement not representable in M2");
      }
      out << "A " << e.src_start << ' ' << e.src_end << kSep << to_string(e.category) << kSep
          << e.replacement << kSep << "0\n";
    }
  }
}

void write_m2(const std::filesystem::path& path, const std::vector<ParallelPair>& pairs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  write_m2(out, pairs);
}

std::vector<ParallelPair> read_m2(std::istream& in) {
  std::vector<ParallelPair> out;
  std::string line;
  std::size_t line_no = 0;
  std::size_t count = 0;
  Block block;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!is_valid_utf8(line)) fail(line_no, "invalid UTF-8");
    if (line.empty()) {
      close_block(block, out, count);
      continue;
    }
    if (block.first_line == 0) block.first_line = line_no;
    if (line.starts_with("# ")) {
      if (block.has_source) fail(line_no, "id comment inside a block");
      block.pair.id = line.substr(2);
    } else if (line.starts_with("S ") || line == "S") {
      if (block.has_source) fail(line_no, "second S line in a block");
      block.has_source = true;
      block.pair.source = line.size() > 2 ? line.substr(2) : std::string();
    } else if (line.starts_with("A ")) {
      if (!block.has_source) fail(line_no, "annotation before S line");
      const std::string_view body = std::string_view(line).substr(2);
      std::vector<std::string_view> fields;
      std::size_t pos = 0;
      while (true) {
        const auto next = body.find(kSep, pos);
        fields.push_back(body.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
        if (next == std::string_view::npos) break;
        pos = next + kSep.size();
      }
      if (fields.size() != 4) fail(line_no, "expected 4 fields separated by |||");
      const auto space = fields[0].find(' ');
      if (space == std::string_view::npos) fail(line_no, "expected '<start> <end>'");
      const long long s = parse_offset(fields[0].substr(0, space), line_no);
      const long long e = parse_offset(fields[0].substr(space + 1), line_no);
      if (fields[1] == "noop") {
        if (s != -1 || e != -1 || !block.pair.gold_edits.empty()) fail(line_no, "misplaced noop annotation");
        block.noop = true;
        continue;
      }
      if (block.noop) fail(line_no, "edit after noop annotation");
      if (s < 0 || e < s) fail(line_no, "bad span");
      if (static_cast<std::size_t>(e) > utf8_length(block.pair.source)) fail(line_no, "span past end of source");
      const auto cat = category_from_string(fields[1]);
      if (!cat) fail(line_no, "unknown category '" + std::string(fields[1]) + "'");
      block.pair.gold_edits.push_back(
          {static_cast<std::size_t>(s), static_cast<std::size_t>(e), std::string(fields[2]), *cat});
    } else {
      fail(line_no, "unrecognised line");
    }
  }
  close_block(block, out, count);
  return out;
}

std::vector<ParallelPair> read_m2(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return read_m2(in);
}

}  // namespace litgec
