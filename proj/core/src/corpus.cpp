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

#include "litgec/corpus.hpp"

#include <algorithm>

#include "litgec/error.hpp"
#include "litgec/text.hpp"

namespace litgec {

void FilterConfig::validate() const {
  auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!in_unit(min_letter_fraction) || !in_unit(space_ratio_bound)) {
    throw Error(ErrorCode::InvalidConfig, "filter ratios must lie in [0, 1]");
  }
}

std::string_view to_string(FilterReason reason) noexcept {
  switch (reason) {
    case FilterReason::Kept: return "Kept";
    case FilterReason::TooShort: return "TooShort";
    case FilterReason::LowLetterFraction: return "LowLetterFraction";
    case FilterReason::SpaceRatio: return "SpaceRatio";
    case FilterReason::Duplicate: return "Duplicate";
  }
  return "Unknown";
}

namespace {

constexpr char32_t kOpen = U'„';
constexpr char32_t kClose = U'“';

// Length of the quote token starting at i, or 0.
std::size_t quote_token(std::u32string_view t, std::size_t i) {
  const char32_t c = t[i];
  if (i + 1 < t.size() && t[i + 1] == c &&
      (c == U'`' || c == U'\'' || c == U'‘' || c == U'’' || c == U',')) {
    return 2;
  }
  if (c == U'"' || c == U'“' || c == U'”' || c == U'„') return 1;
  return 0;
}

bool horizontal_space(char32_t c) {
  return chars::is_space(c) && !chars::is_line_break(c);
}

bool closes_clause(char32_t c) {
  switch (c) {
    case U',': case U'.': case U';': case U':': case U'!': case U'?':
    case U')': case U']': case U'}':
      return true;
    default:
      return false;
  }
}

bool word_start(std::u32string_view t, std::size_t i) {
  return chars::is_letter(t[i]) && (i == 0 || !chars::is_alnum(t[i - 1]));
}

}  // namespace

std::u32string normalize_quotes(std::u32string_view t) {
  struct Token {
    std::size_t pos, len;
  };
  std::vector<Token> tokens;
  for (std::size_t i = 0; i < t.size();) {
    const std::size_t len = quote_token(t, i);
    if (len > 0) {
      tokens.push_back({i, len});
      i += len;
    } else {
      ++i;
    }
  }
  const std::size_t paired = tokens.size() - tokens.size() % 2;

  std::u32string out;
  out.reserve(t.size());
  std::size_t cursor = 0;
  for (std::size_t k = 0; k < paired; ++k) {
    out.append(t.substr(cursor, tokens[k].pos - cursor));
    out.push_back(k % 2 == 0 ? kOpen : kClose);
    cursor = tokens[k].pos + tokens[k].len;
  }
  out.append(t.substr(cursor));
  return out;
}

std::u32string fix_missing_space(std::u32string_view input) {
  std::u32string t(input);
  for (;;) {
    // Positions after which a space goes.
    std::vector<std::size_t> after;
    for (std::size_t i = 0; i + 2 < t.size(); ++i) {
      if (chars::is_digit(t[i]) && (t[i + 1] == U'm' || t[i + 1] == U'd') &&
          t[i + 2] == U'.') {
        after.push_back(i);
        continue;
      }
      if (!word_start(t, i) || t[i + 1] != U'.') continue;
      if (chars::is_upper(t[i]) && chars::is_upper(t[i + 2])) {
        after.push_back(i + 1);  // A.Sabonis
      } else if (chars::is_letter(t[i + 2]) && i + 3 < t.size() && t[i + 3] == U'.') {
        after.push_back(i + 1);  // t.t.
      }
    }
    if (after.empty()) return t;
    std::u32string out;
    out.reserve(t.size() + after.size());
    std::size_t next = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      out.push_back(t[i]);
      if (next < after.size() && after[next] == i) {
        out.push_back(U' ');
        ++next;
      }
    }
    t = std::move(out);
  }
}

std::u32string fix_extra_space(std::u32string_view t) {
  std::u32string out;
  out.reserve(t.size());
  std::size_t i = 0;
  while (i < t.size()) {
    if (horizontal_space(t[i])) {
      std::size_t j = i;
      while (j < t.size() && horizontal_space(t[j])) ++j;
      if (j < t.size() && closes_clause(t[j])) {
        i = j;
        continue;
      }
      out.append(t.substr(i, j - i));
      i = j;
      continue;
    }
    out.push_back(t[i++]);
  }
  return out;
}

std::u32string clean_text(std::u32string_view input) {
  std::u32string current(input);
  // Removing a space before punctuation can expose a new "1918m." or ",,";
  // two rounds settle every case, the cap only guards the loop.
  for (int round = 0; round < 16; ++round) {
    std::u32string next = fix_extra_space(fix_missing_space(normalize_quotes(current)));
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

std::string normalize_quotes(std::string_view text) {
  return utf8_encode(normalize_quotes(std::u32string_view(utf8_decode(text))));
}

std::string fix_missing_space(std::string_view text) {
  return utf8_encode(fix_missing_space(std::u32string_view(utf8_decode(text))));
}

std::string fix_extra_space(std::string_view text) {
  return utf8_encode(fix_extra_space(std::u32string_view(utf8_decode(text))));
}

std::string clean_text(std::string_view text) {
  return utf8_encode(clean_text(std::u32string_view(utf8_decode(text))));
}

TextSample preprocess(TextSample sample) {
  sample.text = clean_text(sample.text);
  return sample;
}

double letter_fraction(std::string_view text, std::u32string_view extra) {
  static constexpr std::u32string_view kPunct = U".,;:!?()[]\"„“–-'/%";
  std::size_t total = 0;
  std::size_t allowed = 0;
  for (const char32_t c : utf8_decode(text)) {
    if (chars::is_space(c)) continue;
    ++total;
    if (chars::is_lithuanian_letter(c) || chars::is_digit(c) ||
        kPunct.find(c) != std::u32string_view::npos ||
        extra.find(c) != std::u32string_view::npos) {
      ++allowed;
    }
  }
  if (total == 0) return 1.0;
  return static_cast<double>(allowed) / static_cast<double>(total);
}

double space_ratio(std::string_view text) {
  std::size_t spaces = 0;
  std::size_t others = 0;
  for (const char32_t c : utf8_decode(text)) {
    if (chars::is_space(c)) {
      ++spaces;
    } else {
      ++others;
    }
  }
  if (others == 0) return spaces > 0 ? 1.0 : 0.0;
  return std::min(1.0, static_cast<double>(spaces) / static_cast<double>(others));
}

FilterVerdict filter(const TextSample& sample, const FilterConfig& cfg) {
  if (utf8_length(sample.text) < cfg.min_chars) {
    return {false, FilterReason::TooShort};
  }
  if (letter_fraction(sample.text, cfg.extra_allowed_chars) < cfg.min_letter_fraction) {
    return {false, FilterReason::LowLetterFraction};
  }
  const double ratio = space_ratio(sample.text);
  const bool bad = cfg.space_ratio_mode == SpaceRatioMode::Minimum
                       ? ratio < cfg.space_ratio_bound
                       : ratio > cfg.space_ratio_bound;
  if (bad) return {false, FilterReason::SpaceRatio};
  return {};
}

bool Deduplicator::admit(const TextSample& sample) {
  return seen_.emplace(trim(std::string_view(sample.text))).second;
}

std::vector<TextSample> dedupe(std::vector<TextSample> samples) {
  Deduplicator seen;
  std::vector<TextSample> out;
  out.reserve(samples.size());
  for (auto& s : samples) {
    if (seen.admit(s)) out.push_back(std::move(s));
  }
  return out;
}

std::string SplitResult::join() const {
  std::string out;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    out += pieces[k];
    if (k < separators.size()) out += separators[k];
  }
  return out;
}

SplitResult split_long(std::string_view text, std::size_t max_chars) {
  if (max_chars == 0) {
    throw Error(ErrorCode::InvalidInput, "split_long: max_chars must be at least 1");
  }
  const std::u32string t = utf8_decode(text);
  SplitResult result;
  std::size_t begin = 0;
  while (t.size() - begin > max_chars) {
    // Largest cut <= max_chars whose whitespace run starts a non-empty
    // piece and is followed by more text.
    std::size_t cut = 0;
    std::size_t sep_end = 0;
    for (std::size_t len = max_chars; len >= 1; --len) {
      const std::size_t at = begin + len;
      if (!chars::is_space(t[at])) continue;
      std::size_t run_begin = at;
      while (run_begin > begin && chars::is_space(t[run_begin - 1])) --run_begin;
      if (run_begin == begin) break;
      std::size_t run_end = at;
      while (run_end < t.size() && chars::is_space(t[run_end])) ++run_end;
      if (run_end == t.size()) {
        // Trailing whitespace only; keep looking further left.
        len = run_begin - begin;
        continue;
      }
      cut = run_begin;
      sep_end = run_end;
      break;
    }
    if (cut == 0) {
      cut = begin + max_chars;
      sep_end = cut;
    }
    result.pieces.push_back(utf8_encode(std::u32string_view(t).substr(begin, cut - begin)));
    result.separators.push_back(utf8_encode(std::u32string_view(t).substr(cut, sep_end - cut)));
    begin = sep_end;
  }
  result.pieces.push_back(utf8_encode(std::u32string_view(t).substr(begin)));
  return result;
}

}  // namespace litgec
