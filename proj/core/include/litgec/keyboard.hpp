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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

namespace litgec {

struct KeyNeighbor {
  char32_t ch;
  double weight;

  friend bool operator==(const KeyNeighbor&, const KeyNeighbor&) = default;
};

/// Which characters a finger may hit instead of the intended one.
///
/// The default is physical QWERTY adjacency (row and diagonal neighbours)
/// with uniform weights. Capitals use the neighbours of their lowercase key
/// in capitals; Lithuanian letters borrow the neighbours of their base key.
/// A weight file can replace the neighbour list of any character.
class KeyboardModel {
 public:
  static KeyboardModel qwerty();

  /// QWERTY defaults overridden by a `from to weight` file.
  static KeyboardModel load(const std::filesystem::path& path);

  /// Lines `from_char to_char weight`; the token SPACE stands for ' ' and
  /// '#' starts a comment. Each `from` char listed replaces its default
  /// neighbour list. Throws Error(ParseError) on malformed lines.
  void apply_weights(std::istream& in);

  /// Possible mistypes of c with non-negative weights; empty when c is not
  /// on the keyboard.
  std::vector<KeyNeighbor> neighbors(char32_t c) const;

  /// Every character neighbors() can return.
  std::u32string charset() const;

 private:
  std::unordered_map<char32_t, std::vector<KeyNeighbor>> table_;
};

}  // namespace litgec
