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

#include "litgec/align.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <unordered_map>

#include "litgec/error.hpp"
#include "litgec/text.hpp"

namespace litgec {

std::string_view to_string(AlignOpKind kind) noexcept {
  switch (kind) {
    case AlignOpKind::Match: return "match";
    case AlignOpKind::Substitute: return "substitute";
    case AlignOpKind::Transpose: return "transpose";
    case AlignOpKind::Delete: return "delete";
    case AlignOpKind::Insert: return "insert";
  }
  return "match";
}

std::size_t AlignOp::cost() const noexcept {
  switch (kind) {
    case AlignOpKind::Match: return 0;
    case AlignOpKind::Substitute:
    case AlignOpKind::Delete:
    case AlignOpKind::Insert: return 1;
    case AlignOpKind::Transpose: return 1 + (src.size() - 2) + (tgt.size() - 2);
  }
  return 0;
}

std::u32string AlignmentScript::replay(std::u32string_view first) const {
  std::u32string out;
  std::size_t pos = 0;
  for (const auto& op : ops) {
    if (op.src_pos != pos || first.substr(pos, op.src.size()) != op.src) {
      throw Error(ErrorCode::InvalidInput, "alignment script does not match its input");
    }
    pos += op.src.size();
    out += op.tgt;
  }
  if (pos != first.size()) {
    throw Error(ErrorCode::InvalidInput, "alignment script leaves input unconsumed");
  }
  return out;
}

namespace {

constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max() / 4;

// S(i, j) = distance between a[i..] and b[j..], kept only for |i - j| <= band.
// Cells on any path of total cost <= band lie inside it, so once S(0, 0) <=
// band the table agrees with the unbanded one wherever an optimal script can
// go.
class SuffixTable {
 public:
  SuffixTable(std::u32string_view a, std::u32string_view b, std::size_t band)
      : a_(a), b_(b), band_(band), width_(2 * band + 1), cells_((a.size() + 1) * width_, kInf) {
    for (std::size_t j = 0; j < b_.size(); ++j) positions_[b_[j]].push_back(j);
    fill();
  }

  std::uint32_t at(std::size_t i, std::size_t j) const noexcept {
    if (i > a_.size() || j > b_.size() || j + band_ < i || j > i + band_) return kInf;
    return cells_[i * width_ + (j + band_ - i)];
  }

  // Nearest k > j with b[k] == c.
  std::size_t next_in_b(char32_t c, std::size_t j) const {
    const auto it = positions_.find(c);
    if (it == positions_.end()) return npos;
    const auto& v = it->second;
    const auto pos = std::upper_bound(v.begin(), v.end(), j);
    return pos == v.end() ? npos : *pos;
  }

  // Nearest k > i with a[k] == c.
  std::size_t next_in_a(char32_t c, std::size_t i) const {
    for (std::size_t k = i + 1; k < a_.size(); ++k) {
      if (a_[k] == c) return k;
    }
    return npos;
  }

  std::uint32_t transpose_cost(std::size_t i, std::size_t j, std::size_t i2, std::size_t j2) const {
    if (i2 == npos || j2 == npos) return kInf;
    const std::uint32_t rest = at(i2 + 1, j2 + 1);
    if (rest >= kInf) return kInf;
    return rest + static_cast<std::uint32_t>((i2 - i - 1) + (j2 - j - 1) + 1);
  }

  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

 private:
  std::uint32_t& cell(std::size_t i, std::size_t j) noexcept {
    return cells_[i * width_ + (j + band_ - i)];
  }

  void fill() {
    const std::size_t n = a_.size();
    const std::size_t m = b_.size();
    std::unordered_map<char32_t, std::size_t> next_row;
    for (std::size_t ii = n + 1; ii-- > 0;) {
      const std::size_t jlo = ii > band_ ? ii - band_ : 0;
      const std::size_t jhi = std::min(m, ii + band_);
      for (std::size_t jj = jhi + 1; jj-- > jlo;) {
        std::uint32_t best;
        if (ii == n) {
          best = static_cast<std::uint32_t>(m - jj);
        } else if (jj == m) {
          best = static_cast<std::uint32_t>(n - ii);
        } else {
          const bool same = a_[ii] == b_[jj];
          best = at(ii + 1, jj + 1) + (same ? 0 : 1);
          best = std::min(best, at(ii + 1, jj) + 1);
          best = std::min(best, at(ii, jj + 1) + 1);
          if (!same) {
            const auto row = next_row.find(b_[jj]);
            const std::size_t i2 = row == next_row.end() ? npos : row->second;
            best = std::min(best, transpose_cost(ii, jj, i2, next_in_b(a_[ii], jj)));
          }
          best = std::min(best, kInf);
        }
        cell(ii, jj) = best;
      }
      if (ii < n) next_row[a_[ii]] = ii;
    }
  }

  std::u32string_view a_;
  std::u32string_view b_;
  std::size_t band_;
  std::size_t width_;
  std::vector<std::uint32_t> cells_;
  std::unordered_map<char32_t, std::vector<std::size_t>> positions_;
};

SuffixTable build_table(std::u32string_view a, std::u32string_view b) {
  const std::size_t full = std::max(a.size(), b.size());
  const std::size_t diff = a.size() > b.size() ? a.size() - b.size() : b.size() - a.size();
  std::size_t band = std::min(full, std::max<std::size_t>(16, 2 * diff + 8));
  for (;;) {
    SuffixTable table(a, b, band);
    if (band >= full || table.at(0, 0) <= band) return table;
    band = std::min(full, band * 2);
  }
}

// Length of the shared prefix and of the shared suffix after it. Trimming
// both leaves the distance unchanged, and the tracer below would match those
// characters anyway, so only the middle needs a table.
std::pair<std::size_t, std::size_t> common_affixes(std::u32string_view a, std::u32string_view b) {
  const std::size_t limit = std::min(a.size(), b.size());
  std::size_t p = 0;
  while (p < limit && a[p] == b[p]) ++p;
  std::size_t s = 0;
  while (s < limit - p && a[a.size() - 1 - s] == b[b.size() - 1 - s]) ++s;
  return {p, s};
}

}  // namespace

AlignmentScript align(std::u32string_view a, std::u32string_view b) {
  const auto [prefix, suffix] = common_affixes(a, b);
  const auto ma = a.substr(prefix, a.size() - prefix - suffix);
  const auto mb = b.substr(prefix, b.size() - prefix - suffix);
  const SuffixTable s = build_table(ma, mb);
  const std::size_t n = ma.size();
  const std::size_t m = mb.size();

  AlignmentScript script;
  script.cost = s.at(0, 0);
  for (std::size_t k = 0; k < prefix; ++k) {
    script.ops.push_back({AlignOpKind::Match, k, k, std::u32string(1, a[k]), std::u32string(1, b[k])});
  }
  std::size_t i = 0;
  std::size_t j = 0;
  auto push = [&](AlignOpKind kind, std::u32string_view src, std::u32string_view tgt) {
    script.ops.push_back({kind, prefix + i, prefix + j, std::u32string(src), std::u32string(tgt)});
  };
  while (i < n || j < m) {
    const std::uint32_t cur = s.at(i, j);
    if (i < n && j < m) {
      if (ma[i] == mb[j] && s.at(i + 1, j + 1) == cur) {
        push(AlignOpKind::Match, ma.substr(i, 1), mb.substr(j, 1));
        ++i, ++j;
        continue;
      }
      if (ma[i] != mb[j]) {
        if (s.at(i + 1, j + 1) + 1 == cur) {
          push(AlignOpKind::Substitute, ma.substr(i, 1), mb.substr(j, 1));
          ++i, ++j;
          continue;
        }
        const std::size_t i2 = s.next_in_a(mb[j], i);
        const std::size_t j2 = s.next_in_b(ma[i], j);
        if (s.transpose_cost(i, j, i2, j2) == cur) {
          push(AlignOpKind::Transpose, ma.substr(i, i2 - i + 1), mb.substr(j, j2 - j + 1));
          i = i2 + 1;
          j = j2 + 1;
          continue;
        }
      }
    }
    if (i < n && s.at(i + 1, j) + 1 == cur) {
      push(AlignOpKind::Delete, ma.substr(i, 1), {});
      ++i;
      continue;
    }
    push(AlignOpKind::Insert, {}, mb.substr(j, 1));
    ++j;
  }
  for (std::size_t k = 0; k < suffix; ++k) {
    const std::size_t ia = prefix + n + k;
    const std::size_t ib = prefix + m + k;
    script.ops.push_back({AlignOpKind::Match, ia, ib, std::u32string(1, a[ia]), std::u32string(1, b[ib])});
  }
  return script;
}

AlignmentScript align(std::string_view a, std::string_view b) {
  const auto ua = utf8_decode(a);
  const auto ub = utf8_decode(b);
  return align(std::u32string_view(ua), std::u32string_view(ub));
}

std::size_t edit_distance(std::u32string_view a, std::u32string_view b) {
  const auto [prefix, suffix] = common_affixes(a, b);
  return build_table(a.substr(prefix, a.size() - prefix - suffix), b.substr(prefix, b.size() - prefix - suffix))
      .at(0, 0);
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  const auto ua = utf8_decode(a);
  const auto ub = utf8_decode(b);
  return edit_distance(std::u32string_view(ua), std::u32string_view(ub));
}

std::vector<Edit> extract_edits(std::u32string_view source, std::u32string_view hypothesis) {
  const auto script = align(source, hypothesis);
  std::vector<Edit> edits;
  bool open = false;
  std::u32string replacement;
  for (const auto& op : script.ops) {
    if (op.kind == AlignOpKind::Match) {
      if (open) {
        edits.back().replacement = utf8_encode(replacement);
        open = false;
      }
      continue;
    }
    if (!open) {
      edits.push_back({op.src_pos, op.src_pos, {}, ErrorCategory::Other});
      replacement.clear();
      open = true;
    }
    edits.back().src_end = op.src_pos + op.src.size();
    replacement += op.tgt;
  }
  if (open) edits.back().replacement = utf8_encode(replacement);
  return edits;
}

std::vector<Edit> extract_edits(std::string_view source, std::string_view hypothesis) {
  const auto s = utf8_decode(source);
  const auto h = utf8_decode(hypothesis);
  return extract_edits(std::u32string_view(s), std::u32string_view(h));
}

}  // namespace litgec
