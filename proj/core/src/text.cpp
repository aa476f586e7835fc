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

#include "litgec/text.hpp"

#include <string>

#include "litgec/error.hpp"

namespace litgec {

namespace {

// Returns the decoded code point and advances pos, or -1 on malformed input.
long decode_one(std::string_view s, std::size_t& pos) noexcept {
  const auto lead = static_cast<unsigned char>(s[pos]);
  if (lead < 0x80) {
    ++pos;
    return lead;
  }
  int extra = 0;
  char32_t cp = 0;
  if ((lead & 0xE0) == 0xC0) {
    extra = 1;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3;
    cp = lead & 0x07;
  } else {
    return -1;
  }
  if (pos + static_cast<std::size_t>(extra) >= s.size()) return -1;
  for (int k = 1; k <= extra; ++k) {
    const auto b = static_cast<unsigned char>(s[pos + k]);
    if ((b & 0xC0) != 0x80) return -1;
    cp = (cp << 6) | (b & 0x3F);
  }
  static constexpr char32_t kMin[] = {0, 0x80, 0x800, 0x10000};
  if (cp < kMin[extra]) return -1;
  if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return -1;
  pos += extra + 1;
  return static_cast<long>(cp);
}

}  // namespace

std::u32string utf8_decode(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    const std::size_t at = pos;
    const long cp = decode_one(bytes, pos);
    if (cp < 0) {
      throw Error(ErrorCode::InvalidUtf8,
                  "invalid UTF-8 sequence at byte " + std::to_string(at));
    }
    out.push_back(static_cast<char32_t>(cp));
  }
  return out;
}

bool is_valid_utf8(std::string_view bytes) noexcept {
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    if (decode_one(bytes, pos) < 0) return false;
  }
  return true;
}

std::size_t utf8_length(std::string_view bytes) {
  std::size_t n = 0;
  for (const char c : bytes) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
  }
  return n;
}

std::string utf8_encode(char32_t c) {
  std::string out;
  if (c < 0x80) {
    out.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (c >> 6)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (c >> 12)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (c >> 18)));
    out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
  return out;
}

std::string utf8_encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (const char32_t c : text) out += utf8_encode(c);
  return out;
}

static_assert(sizeof(wchar_t) == 4, "wide regex matching needs a 32-bit wchar_t");

std::wstring to_wide(std::u32string_view text) {
  return std::wstring(text.begin(), text.end());
}

std::u32string from_wide(std::wstring_view text) {
  std::u32string out;
  out.reserve(text.size());
  for (const wchar_t c : text) out.push_back(static_cast<char32_t>(c));
  return out;
}

namespace chars {

bool is_space(char32_t c) noexcept {
  return (c >= 0x09 && c <= 0x0D) || c == 0x20 || c == 0x85 || c == 0xA0 ||
         c == 0x1680 || (c >= 0x2000 && c <= 0x200A) || c == 0x2028 ||
         c == 0x2029 || c == 0x202F || c == 0x205F || c == 0x3000;
}

bool is_line_break(char32_t c) noexcept {
  return (c >= 0x0A && c <= 0x0D) || c == 0x85 || c == 0x2028 || c == 0x2029;
}

bool is_digit(char32_t c) noexcept { return c >= U'0' && c <= U'9'; }

bool is_letter(char32_t c) noexcept {
  if ((c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z')) return true;
  if (c == 0xAA || c == 0xB5 || c == 0xBA) return true;
  if (c >= 0xC0 && c <= 0x24F) return c != 0xD7 && c != 0xF7;
  if (c >= 0x370 && c <= 0x3FF) return c != 0x37E && c != 0x387;
  if (c >= 0x400 && c <= 0x481) return true;
  if (c >= 0x48A && c <= 0x52F) return true;
  if (c >= 0x1E00 && c <= 0x1EFF) return true;
  return false;
}

namespace {

// Latin Extended-A pairs upper/lower as (even, odd) except in these ranges,
// where the capital sits on the odd code point.
bool odd_is_upper(char32_t c) noexcept {
  return (c >= 0x139 && c <= 0x148) || (c >= 0x179 && c <= 0x17E);
}

bool paired_extended_a(char32_t c) noexcept {
  return c >= 0x100 && c <= 0x17E && c != 0x130 && c != 0x131 && c != 0x138 &&
         c != 0x149 && c != 0x178;
}

}  // namespace

bool is_upper(char32_t c) noexcept {
  if (c >= U'A' && c <= U'Z') return true;
  if (c >= 0xC0 && c <= 0xDE) return c != 0xD7;
  if (paired_extended_a(c)) return odd_is_upper(c) ? (c % 2 == 1) : (c % 2 == 0);
  if (c == 0x130 || c == 0x178) return true;
  if (c >= 0x410 && c <= 0x42F) return true;
  if (c >= 0x400 && c <= 0x40F) return true;
  return false;
}

bool is_lower(char32_t c) noexcept { return is_letter(c) && !is_upper(c); }

char32_t to_lower(char32_t c) noexcept {
  if (c >= U'A' && c <= U'Z') return c + 32;
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 32;
  if (paired_extended_a(c) && is_upper(c)) return c + 1;
  if (c == 0x130) return U'i';
  if (c == 0x178) return 0xFF;
  if (c >= 0x410 && c <= 0x42F) return c + 32;
  if (c >= 0x400 && c <= 0x40F) return c + 80;
  return c;
}

char32_t to_upper(char32_t c) noexcept {
  if (c >= U'a' && c <= U'z') return c - 32;
  if (c >= 0xE0 && c <= 0xFE && c != 0xF7) return c - 32;
  if (c == 0xFF) return 0x178;
  if (paired_extended_a(c) && !is_upper(c)) return c - 1;
  if (c >= 0x430 && c <= 0x44F) return c - 32;
  if (c >= 0x450 && c <= 0x45F) return c - 80;
  return c;
}

bool is_alnum(char32_t c) noexcept { return is_letter(c) || is_digit(c); }

bool is_punct(char32_t c) noexcept {
  return !is_letter(c) && !is_digit(c) && !is_space(c);
}

bool is_lithuanian_letter(char32_t c) noexcept {
  if ((c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z')) return true;
  switch (to_lower(c)) {
    case U'ą': case U'č': case U'ę': case U'ė': case U'į':
    case U'š': case U'ų': case U'ū': case U'ž':
      return true;
    default:
      return false;
  }
}

bool is_consonant(char32_t c) noexcept {
  switch (to_lower(c)) {
    case U'b': case U'c': case U'č': case U'd': case U'f': case U'g':
    case U'h': case U'j': case U'k': case U'l': case U'm': case U'n':
    case U'p': case U'q': case U'r': case U's': case U'š': case U't':
    case U'v': case U'w': case U'x': case U'z': case U'ž':
      return true;
    default:
      return false;
  }
}

char32_t base_letter(char32_t c) noexcept {
  const bool upper = is_upper(c);
  char32_t base = to_lower(c);
  switch (base) {
    case U'ą': base = U'a'; break;
    case U'č': base = U'c'; break;
    case U'ę': case U'ė': base = U'e'; break;
    case U'į': base = U'i'; break;
    case U'š': base = U's'; break;
    case U'ų': case U'ū': base = U'u'; break;
    case U'ž': base = U'z'; break;
    default: return c;
  }
  return upper ? to_upper(base) : base;
}

}  // namespace chars

std::u32string to_lower(std::u32string_view text) {
  std::u32string out(text);
  for (auto& c : out) c = chars::to_lower(c);
  return out;
}

std::u32string_view trim(std::u32string_view text) noexcept {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && chars::is_space(text[b])) ++b;
  while (e > b && chars::is_space(text[e - 1])) --e;
  return text.substr(b, e - b);
}

std::string_view trim(std::string_view text) noexcept {
  // Walk code points from both ends; stop at the first non-space.
  std::size_t b = 0;
  while (b < text.size()) {
    std::size_t next = b;
    const long cp = decode_one(text, next);
    if (cp < 0 || !chars::is_space(static_cast<char32_t>(cp))) break;
    b = next;
  }
  std::size_t e = text.size();
  while (e > b) {
    std::size_t start = e - 1;
    while (start > b && (static_cast<unsigned char>(text[start]) & 0xC0) == 0x80) --start;
    std::size_t next = start;
    const long cp = decode_one(text, next);
    if (cp < 0 || next != e || !chars::is_space(static_cast<char32_t>(cp))) break;
    e = start;
  }
  return text.substr(b, e - b);
}

}  // namespace litgec
