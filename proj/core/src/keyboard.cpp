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

#include "litgec/keyboard.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "litgec/error.hpp"
#include "litgec/text.hpp"

namespace litgec {

namespace {

struct Row {
  std::u32string_view keys;
  double offset;  // x of the first key, in key widths
};

constexpr Row kRows[] = {
    {U"1234567890-=", 1.0},
    {U"qwertyuiop[]", 1.5},
    {U"asdfghjkl;'", 1.75},
    {U"zxcvbnm,./", 2.25},
};

}  // namespace

KeyboardModel KeyboardModel::qwerty() {
  KeyboardModel model;
  constexpr int kRowCount = static_cast<int>(std::size(kRows));
  for (int r = 0; r < kRowCount; ++r) {
    for (std::size_t k = 0; k < kRows[r].keys.size(); ++k) {
      const double x = kRows[r].offset + static_cast<double>(k);
      auto& list = model.table_[kRows[r].keys[k]];
      for (int rr = std::max(0, r - 1); rr <= std::min(kRowCount - 1, r + 1); ++rr) {
        for (std::size_t kk = 0; kk < kRows[rr].keys.size(); ++kk) {
          if (rr == r && kk == k) continue;
          const double dx = std::abs(kRows[rr].offset + static_cast<double>(kk) - x);
          const bool adjacent = rr == r ? dx < 1.5 : dx < 1.0;
          if (adjacent) list.push_back({kRows[rr].keys[kk], 1.0});
        }
      }
    }
  }
  // The space bar sits under x..m.
  auto& space = model.table_[U' '];
  for (const char32_t c : std::u32string_view(U"xcvbnm")) space.push_back({c, 1.0});
  return model;
}

KeyboardModel KeyboardModel::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  auto model = qwerty();
  model.apply_weights(in);
  return model;
}

void KeyboardModel::apply_weights(std::istream& in) {
  std::unordered_map<char32_t, std::vector<KeyNeighbor>> loaded;
  std::vector<char32_t> order;
  std::string line;
  std::size_t line_no = 0;
  auto parse_char = [&](const std::string& token) -> char32_t {
    if (token == "SPACE") return U' ';
    const auto decoded = utf8_decode(token);
    if (decoded.size() != 1) {
      throw Error(ErrorCode::ParseError, "keyboard weights line " + std::to_string(line_no) +
                                             ": expected one character, got '" + token + "'");
    }
    return decoded[0];
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string from, to, weight_text;
    if (!(fields >> from) || from.front() == '#') continue;
    if (!(fields >> to >> weight_text)) {
      throw Error(ErrorCode::ParseError,
                  "keyboard weights line " + std::to_string(line_no) + ": expected 'from to weight'");
    }
    double weight = 0.0;
    try {
      std::size_t used = 0;
      weight = std::stod(weight_text, &used);
      if (used != weight_text.size()) throw std::invalid_argument(weight_text);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError,
                  "keyboard weights line " + std::to_string(line_no) + ": bad weight '" + weight_text + "'");
    }
    if (!(weight >= 0.0) || !std::isfinite(weight)) {
      throw Error(ErrorCode::ParseError,
                  "keyboard weights line " + std::to_string(line_no) + ": weight must be >= 0");
    }
    const char32_t f = parse_char(from);
    const char32_t t = parse_char(to);
    if (!loaded.contains(f)) order.push_back(f);
    if (weight > 0.0 && f != t) loaded[f].push_back({t, weight});
  }
  for (const char32_t f : order) table_[f] = std::move(loaded[f]);
}

std::vector<KeyNeighbor> KeyboardModel::neighbors(char32_t c) const {
  if (const auto it = table_.find(c); it != table_.end()) return it->second;
  if (chars::is_upper(c)) {
    auto lower = neighbors(chars::to_lower(c));
    for (auto& n : lower) n.ch = chars::to_upper(n.ch);
    return lower;
  }
  const char32_t base = chars::base_letter(c);
  if (base != c) return neighbors(base);
  return {};
}

std::u32string KeyboardModel::charset() const {
  std::set<char32_t> all;
  for (const auto& [from, list] : table_) {
    for (const auto& n : list) {
      all.insert(n.ch);
      all.insert(chars::to_upper(n.ch));
    }
  }
  return std::u32string(all.begin(), all.end());
}

}  // namespace litgec
