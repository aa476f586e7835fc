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

// UTF-8 codec and the small amount of Unicode character knowledge the
// pipeline needs. Everything character-level works on std::u32string so
// offsets are code-point offsets.

#include <string>
#include <string_view>

namespace litgec {

/// Decodes UTF-8. Throws Error(InvalidUtf8) on malformed input, overlong
/// forms, surrogates or code points above U+10FFFF.
std::u32string utf8_decode(std::string_view bytes);
std::string utf8_encode(std::u32string_view text);
std::string utf8_encode(char32_t c);

bool is_valid_utf8(std::string_view bytes) noexcept;

/// Number of code points; the input must be valid UTF-8.
std::size_t utf8_length(std::string_view bytes);

/// std::wregex only sees code points on platforms with a 32-bit wchar_t.
std::wstring to_wide(std::u32string_view text);
std::u32string from_wide(std::wstring_view text);

namespace chars {

bool is_space(char32_t c) noexcept;
bool is_line_break(char32_t c) noexcept;
bool is_digit(char32_t c) noexcept;

// Letters of the Latin script blocks (ASCII, Latin-1, Extended-A/B).
bool is_letter(char32_t c) noexcept;
bool is_upper(char32_t c) noexcept;
bool is_lower(char32_t c) noexcept;
char32_t to_lower(char32_t c) noexcept;
char32_t to_upper(char32_t c) noexcept;

bool is_alnum(char32_t c) noexcept;

// Anything that is not a letter, a digit or whitespace.
bool is_punct(char32_t c) noexcept;

/// a-z, A-Z and the nine Lithuanian diacritic letters in both cases.
bool is_lithuanian_letter(char32_t c) noexcept;

bool is_consonant(char32_t c) noexcept;

/// Strips the ogonek/caron/dot/macron of Lithuanian letters (ą -> a).
char32_t base_letter(char32_t c) noexcept;

}  // namespace chars

std::u32string to_lower(std::u32string_view text);

/// Trims Unicode whitespace from both ends.
std::string_view trim(std::string_view text) noexcept;
std::u32string_view trim(std::u32string_view text) noexcept;

}  // namespace litgec
