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

#include "litgec/noiser.hpp"

#include <algorithm>
#include <cmath>

#include "litgec/align.hpp"
#include "litgec/error.hpp"
#include "litgec/text.hpp"

namespace litgec {

void CorruptionConfig::validate() const {
  auto unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!unit(typo_rate) || !unit(confusion_rate) || !unit(other_rate) || !unit(rule_rate)) {
    throw Error(ErrorCode::InvalidConfig, "corruption rates must lie in [0, 1]");
  }
  double sum = 0.0;
  for (const double w : typo_mix.weights()) {
    if (!(w >= 0.0)) throw Error(ErrorCode::InvalidConfig, "typo mix weights must be >= 0");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error(ErrorCode::InvalidConfig, "typo mix must sum to 1");
  }
}

CorruptionStats& CorruptionStats::operator+=(const CorruptionStats& o) noexcept {
  typos += o.typos;
  confusions += o.confusions;
  gemination += o.gemination;
  assimilation += o.assimilation;
  casing += o.casing;
  spaces += o.spaces;
  rules += o.rules;
  for (std::size_t k = 0; k < typo_ops.size(); ++k) typo_ops[k] += o.typo_ops[k];
  for (std::size_t k = 0; k < edits_by_category.size(); ++k) {
    edits_by_category[k] += o.edits_by_category[k];
  }
  return *this;
}

namespace detail {

bool in_sibilant_group(char32_t c) noexcept {
  switch (chars::to_lower(c)) {
    case U'c': case U'č': case U's': case U'š': case U'z': case U'ž': return true;
    default: return false;
  }
}

bool is_voiceless(char32_t c) noexcept {
  switch (chars::to_lower(c)) {
    case U'p': case U't': case U'k': case U's': case U'š': return true;
    default: return false;
  }
}

bool is_voiced(char32_t c) noexcept {
  switch (chars::to_lower(c)) {
    case U'b': case U'd': case U'g': case U'z': case U'ž': return true;
    default: return false;
  }
}

char32_t voicing_counterpart(char32_t c) noexcept {
  const bool upper = chars::is_upper(c);
  char32_t r;
  switch (chars::to_lower(c)) {
    case U'p': r = U'b'; break;
    case U'b': r = U'p'; break;
    case U't': r = U'd'; break;
    case U'd': r = U't'; break;
    case U'k': r = U'g'; break;
    case U'g': r = U'k'; break;
    case U's': r = U'z'; break;
    case U'z': r = U's'; break;
    case U'š': r = U'ž'; break;
    case U'ž': r = U'š'; break;
    default: return c;
  }
  return upper ? chars::to_upper(r) : r;
}

std::vector<Span> gemination_sites(std::u32string_view t) {
  std::vector<Span> out;
  for (std::size_t i = 0; i + 1 < t.size();) {
    const bool doubled = t[i] == t[i + 1] && chars::is_consonant(t[i]);
    if (doubled || (in_sibilant_group(t[i]) && in_sibilant_group(t[i + 1]))) {
      out.push_back({i, i + 2});
      i += 2;
    } else {
      ++i;
    }
  }
  return out;
}

std::vector<Span> assimilation_sites(std::u32string_view t) {
  std::vector<Span> out;
  for (std::size_t i = 0; i + 1 < t.size();) {
    if ((is_voiceless(t[i]) && is_voiced(t[i + 1])) || (is_voiced(t[i]) && is_voiceless(t[i + 1]))) {
      out.push_back({i, i + 2});
      i += 2;
    } else {
      ++i;
    }
  }
  return out;
}

bool sentence_initial(std::u32string_view t, std::size_t start) {
  static constexpr std::u32string_view kOpeners = U"„“\"”'‘([{«";
  std::size_t k = start;
  while (k > 0 && kOpeners.find(t[k - 1]) != std::u32string_view::npos) --k;
  bool any_letter_before = false;
  for (std::size_t q = 0; q < k; ++q) {
    if (chars::is_alnum(t[q])) {
      any_letter_before = true;
      break;
    }
  }
  if (!any_letter_before) return true;
  std::size_t spaces = 0;
  while (k > 0 && chars::is_space(t[k - 1])) {
    --k;
    ++spaces;
  }
  if (spaces == 0 || k == 0) return false;
  const char32_t end = t[k - 1];
  return end == U'.' || end == U'!' || end == U'?' || end == U'…';
}

std::vector<std::size_t> casing_sites(std::u32string_view t) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!chars::is_letter(t[i]) || (i > 0 && chars::is_alnum(t[i - 1]))) continue;
    if (chars::to_upper(t[i]) == chars::to_lower(t[i])) continue;
    if (sentence_initial(t, i)) continue;
    out.push_back(i);
  }
  return out;
}

}  // namespace detail

namespace {

using detail::gemination_sites;
using detail::assimilation_sites;

std::uint8_t tag(ErrorCategory c) { return static_cast<std::uint8_t>(c) + 1; }

struct Change {
  std::size_t begin;
  std::size_t end;
  std::u32string replacement;
  ErrorCategory category;
};

// Current corrupted text with per-position provenance: which family produced
// each character, and which family deleted something at each gap.
class NoisyText {
 public:
  explicit NoisyText(std::u32string reference)
      : reference_(reference), text_(std::move(reference)),
        origin_(text_.size(), 0), gap_(text_.size() + 1, 0) {}

  const std::u32string& text() const noexcept { return text_; }
  std::size_t size() const noexcept { return text_.size(); }

  bool blocked(std::size_t i) const noexcept { return origin_[i] || gap_[i] || gap_[i + 1]; }

  bool blocked_gap(std::size_t g) const noexcept {
    return gap_[g] || (g > 0 && origin_[g - 1]) || (g < text_.size() && origin_[g]);
  }

  bool blocked_span(std::size_t b, std::size_t e) const noexcept {
    for (std::size_t k = b; k < e; ++k) {
      if (origin_[k]) return true;
    }
    for (std::size_t g = b; g <= e; ++g) {
      if (gap_[g]) return true;
    }
    return false;
  }

  void apply(std::vector<Change> changes) {
    if (changes.empty()) return;
    std::stable_sort(changes.begin(), changes.end(), [](const Change& a, const Change& b) {
      return a.begin != b.begin ? a.begin < b.begin : a.end < b.end;
    });
    std::u32string text;
    std::vector<std::uint8_t> origin;
    std::vector<std::uint8_t> gap(1, 0);
    text.reserve(text_.size() + changes.size());
    auto mark = [&](std::uint8_t m) {
      if (m && !gap.back()) gap.back() = m;
    };
    auto copy = [&](char32_t c, std::uint8_t o) {
      text.push_back(c);
      origin.push_back(o);
      gap.push_back(0);
    };
    std::size_t k = 0;
    for (const auto& ch : changes) {
      for (; k < ch.begin; ++k) {
        mark(gap_[k]);
        copy(text_[k], origin_[k]);
      }
      for (std::size_t g = ch.begin; g <= ch.end; ++g) mark(gap_[g]);
      if (ch.replacement.empty()) {
        mark(tag(ch.category));
      } else {
        for (const char32_t c : ch.replacement) copy(c, tag(ch.category));
      }
      k = ch.end;
    }
    for (; k < text_.size(); ++k) {
      mark(gap_[k]);
      copy(text_[k], origin_[k]);
    }
    mark(gap_[text_.size()]);
    text_ = std::move(text);
    origin_ = std::move(origin);
    gap_ = std::move(gap);
  }

  // Gold edits in corrupted coordinates, attributed to the family that made
  // the nearest recorded change.
  std::vector<Edit> finish(CorruptionStats* stats) const {
    auto edits = extract_edits(std::u32string_view(text_), std::u32string_view(reference_));
    for (auto& e : edits) {
      e.category = attribute(e.src_start, e.src_end);
      if (stats) ++stats->edits_by_category[static_cast<std::size_t>(e.category)];
    }
    return edits;
  }

 private:
  ErrorCategory attribute(std::size_t s, std::size_t e) const {
    auto from = [](std::uint8_t m) { return static_cast<ErrorCategory>(m - 1); };
    for (std::size_t k = s; k <= e; ++k) {
      if (gap_[k]) return from(gap_[k]);
      if (k < e && origin_[k]) return from(origin_[k]);
    }
    const std::size_t n = text_.size();
    for (std::size_t d = 1; d <= n + 1; ++d) {
      if (s >= d) {
        if (origin_[s - d]) return from(origin_[s - d]);
        if (gap_[s - d]) return from(gap_[s - d]);
      }
      if (e + d - 1 < n && origin_[e + d - 1]) return from(origin_[e + d - 1]);
      if (e + d <= n && gap_[e + d]) return from(gap_[e + d]);
    }
    return ErrorCategory::Other;
  }

  std::u32string reference_;
  std::u32string text_;
  std::vector<std::uint8_t> origin_;
  std::vector<std::uint8_t> gap_;
};

std::size_t pick_neighbor(const std::vector<KeyNeighbor>& list, Rng& rng) {
  std::vector<double> w;
  w.reserve(list.size());
  for (const auto& n : list) w.push_back(n.weight);
  return rng.weighted(w);
}

std::vector<KeyNeighbor> usable(std::vector<KeyNeighbor> list) {
  std::erase_if(list, [](const KeyNeighbor& n) { return !(n.weight > 0.0); });
  return list;
}

void run_typos(NoisyText& nt, double rate, const TypoMix& mix, const KeyboardModel& kbd, Rng& rng,
               CorruptionStats& stats) {
  const auto& t = nt.text();
  const std::size_t n = t.size();
  std::vector<bool> claimed(n, false);
  std::vector<Change> changes;
  const auto mix_w = mix.weights();
  for (std::size_t i = 0; i < n; ++i) {
    const char32_t c = t[i];
    if (chars::is_line_break(c) || claimed[i] || nt.blocked(i)) continue;
    const auto nb = usable(kbd.neighbors(c));
    std::size_t partner = n;
    if (i + 1 < n) {
      partner = i + 1;
    } else if (i > 0) {
      partner = i - 1;
    }
    const bool can_swap = partner < n && !chars::is_line_break(t[partner]) && !claimed[partner] &&
                          !nt.blocked(partner) && t[partner] != c;
    const std::array<double, 4> feasible = {
        nb.empty() ? 0.0 : mix_w[0], mix_w[1], nb.empty() ? 0.0 : mix_w[2], can_swap ? mix_w[3] : 0.0};
    if (feasible[0] + feasible[1] + feasible[2] + feasible[3] <= 0.0) continue;
    ++stats.typos.eligible;
    if (!rng.bernoulli(rate)) continue;
    const auto op = static_cast<TypoOp>(rng.weighted(feasible));
    ++stats.typos.applied;
    ++stats.typo_ops[static_cast<std::size_t>(op)];
    claimed[i] = true;
    switch (op) {
      case TypoOp::Substitution:
        changes.push_back({i, i + 1, std::u32string(1, nb[pick_neighbor(nb, rng)].ch),
                           ErrorCategory::Typographical});
        break;
      case TypoOp::Deletion:
        changes.push_back({i, i + 1, {}, ErrorCategory::Typographical});
        break;
      case TypoOp::Insertion:
        changes.push_back({i + 1, i + 1, std::u32string(1, nb[pick_neighbor(nb, rng)].ch),
                           ErrorCategory::Typographical});
        break;
      case TypoOp::Transposition: {
        claimed[partner] = true;
        const std::size_t lo = std::min(i, partner);
        changes.push_back({lo, lo + 2, std::u32string{t[lo + 1], t[lo]}, ErrorCategory::Typographical});
        break;
      }
    }
  }
  nt.apply(std::move(changes));
}

void run_confusions(NoisyText& nt, const ConfusionTable& table, double rate,
                    const std::set<ErrorCategory>& enabled, Rng& rng, CorruptionStats& stats) {
  const auto& t = nt.text();
  std::vector<bool> taken(t.size(), false);
  std::vector<Change> changes;
  for (const auto& group : table.groups()) {
    if (!enabled.contains(group.category())) continue;
    for (const auto& m : group.pattern().find_all(t)) {
      if (nt.blocked_span(m.begin, m.end)) continue;
      if (std::any_of(taken.begin() + m.begin, taken.begin() + m.end, [](bool b) { return b; })) continue;
      const auto surface = std::u32string_view(t).substr(m.begin, m.end - m.begin);
      const auto options = group.replacements_for(surface);
      if (options.empty()) continue;
      ++stats.confusions.eligible;
      if (!rng.bernoulli(rate)) continue;
      std::vector<double> w;
      for (const auto& v : options) w.push_back(static_cast<double>(v.weight));
      const auto& pick = options[rng.weighted(w)];
      ++stats.confusions.applied;
      std::fill(taken.begin() + m.begin, taken.begin() + m.end, true);
      changes.push_back({m.begin, m.end, utf8_decode(pick.surface), group.category()});
    }
  }
  nt.apply(std::move(changes));
}

void run_gemination(NoisyText& nt, double rate, Rng& rng, CorruptionStats& stats) {
  std::vector<Change> changes;
  for (const auto& site : gemination_sites(nt.text())) {
    if (nt.blocked_span(site.begin, site.end)) continue;
    ++stats.gemination.eligible;
    if (!rng.bernoulli(rate)) continue;
    ++stats.gemination.applied;
    changes.push_back({site.begin, site.begin + 1, {}, ErrorCategory::AssimilationGemination});
  }
  nt.apply(std::move(changes));
}

void run_assimilation(NoisyText& nt, double rate, Rng& rng, CorruptionStats& stats) {
  const auto& t = nt.text();
  std::vector<Change> changes;
  for (const auto& site : assimilation_sites(t)) {
    if (nt.blocked_span(site.begin, site.end)) continue;
    ++stats.assimilation.eligible;
    if (!rng.bernoulli(rate)) continue;
    ++stats.assimilation.applied;
    changes.push_back({site.begin, site.begin + 1,
                       std::u32string(1, detail::voicing_counterpart(t[site.begin])),
                       ErrorCategory::AssimilationGemination});
  }
  nt.apply(std::move(changes));
}

void run_casing(NoisyText& nt, double rate, Rng& rng, CorruptionStats& stats) {
  const auto& t = nt.text();
  std::vector<Change> changes;
  for (const std::size_t i : detail::casing_sites(t)) {
    if (nt.blocked(i)) continue;
    ++stats.casing.eligible;
    if (!rng.bernoulli(rate)) continue;
    ++stats.casing.applied;
    const char32_t flipped = chars::is_upper(t[i]) ? chars::to_lower(t[i]) : chars::to_upper(t[i]);
    changes.push_back({i, i + 1, std::u32string(1, flipped), ErrorCategory::Casing});
  }
  nt.apply(std::move(changes));
}

void run_spaces(NoisyText& nt, double rate, Rng& rng, CorruptionStats& stats) {
  const auto& t = nt.text();
  std::vector<Change> changes;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0 && chars::is_letter(t[i - 1]) && chars::is_letter(t[i]) && !nt.blocked_gap(i)) {
      ++stats.spaces.eligible;
      if (rng.bernoulli(rate)) {
        ++stats.spaces.applied;
        changes.push_back({i, i, U" ", ErrorCategory::Spaces});
      }
    }
    if (t[i] == U' ' && !nt.blocked(i)) {
      ++stats.spaces.eligible;
      if (rng.bernoulli(rate)) {
        ++stats.spaces.applied;
        changes.push_back({i, i + 1, {}, ErrorCategory::Spaces});
      }
    }
  }
  nt.apply(std::move(changes));
}

bool word_start(std::u32string_view t, std::size_t i) {
  return chars::is_letter(t[i]) && (i == 0 || !chars::is_alnum(t[i - 1]));
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

bool quote_glyph_neighbor(char32_t c) {
  return c == U',' || c == U'`' || c == U'\'' || c == U'‘' || c == U'’' || c == U'"' ||
         c == U'“' || c == U'”' || c == U'„';
}

void run_rule_errors(NoisyText& nt, double rate, Rng& rng, CorruptionStats& stats) {
  static const std::array<std::pair<std::u32string_view, std::u32string_view>, 4> kQuotePairs = {{
      {U"\"", U"\""}, {U"“", U"”"}, {U"”", U"”"}, {U",,", U"''"}}};
  const auto& t = nt.text();
  const std::size_t n = t.size();
  std::vector<Change> changes;
  std::vector<bool> taken(n + 1, false);

  // Quote pairs as the normalizer sees them: every quote token, paired in
  // order of appearance.
  std::vector<std::size_t> quotes;
  for (std::size_t i = 0; i < n; ++i) {
    const char32_t c = t[i];
    if (i + 1 < n && t[i + 1] == c &&
        (c == U'`' || c == U'\'' || c == U'‘' || c == U'’' || c == U',')) {
      quotes.push_back(n);  // a two-glyph token we leave alone
      ++i;
    } else if (c == U'"' || c == U'“' || c == U'”' || c == U'„') {
      quotes.push_back(i);
    }
  }
  for (std::size_t k = 0; k + 1 < quotes.size(); k += 2) {
    const std::size_t open = quotes[k];
    const std::size_t close = quotes[k + 1];
    if (open >= n || close >= n || t[open] != U'„' || t[close] != U'“') continue;
    if (nt.blocked(open) || nt.blocked(close)) continue;
    ++stats.rules.eligible;
    if (!rng.bernoulli(rate)) continue;
    ++stats.rules.applied;
    auto pair = kQuotePairs[static_cast<std::size_t>(rng.next() % kQuotePairs.size())];
    auto glued = [&](std::size_t at) {
      return (at > 0 && quote_glyph_neighbor(t[at - 1])) || (at + 1 < n && quote_glyph_neighbor(t[at + 1]));
    };
    if (pair.first.size() > 1 && (glued(open) || glued(close))) pair = kQuotePairs[0];
    taken[open] = taken[close] = true;
    changes.push_back({open, open + 1, std::u32string(pair.first), ErrorCategory::Punctuation});
    changes.push_back({close, close + 1, std::u32string(pair.second), ErrorCategory::Punctuation});
  }

  for (std::size_t j = 1; j + 1 < n; ++j) {
    // A space the missing-space fixer would put back.
    if (t[j] == U' ' && !taken[j] && !nt.blocked(j)) {
      bool site = false;
      if (chars::is_digit(t[j - 1]) && j + 2 < n && (t[j + 1] == U'm' || t[j + 1] == U'd') &&
          t[j + 2] == U'.') {
        site = true;
      } else if (t[j - 1] == U'.' && j >= 2 && word_start(t, j - 2)) {
        site = (chars::is_upper(t[j - 2]) && chars::is_upper(t[j + 1])) ||
               (chars::is_letter(t[j + 1]) && j + 2 < n && t[j + 2] == U'.');
      }
      if (site) {
        ++stats.rules.eligible;
        if (rng.bernoulli(rate)) {
          ++stats.rules.applied;
          taken[j] = true;
          changes.push_back({j, j + 1, {}, ErrorCategory::Spaces});
        }
      }
    }
  }
  for (std::size_t i = 1; i < n; ++i) {
    // A space the extra-space fixer would take out again.
    if (closes_clause(t[i]) && !chars::is_space(t[i - 1]) && !taken[i - 1] && !taken[i] &&
        !nt.blocked_gap(i)) {
      ++stats.rules.eligible;
      if (rng.bernoulli(rate)) {
        ++stats.rules.applied;
        changes.push_back({i, i, U" ", ErrorCategory::Spaces});
      }
    }
  }
  nt.apply(std::move(changes));
}

CorruptionResult finish(const NoisyText& nt, CorruptionStats* stats) {
  return {utf8_encode(nt.text()), nt.finish(stats)};
}

// Lanes keep the families' random streams independent.
enum Lane : std::uint64_t { kTypos = 1, kConfusions, kGemination, kAssimilation, kCasing, kSpaces, kRules };

}  // namespace

CorruptionResult corrupt_typos(std::string_view text, const CorruptionConfig& cfg,
                               const KeyboardModel& kbd, Rng& rng, CorruptionStats* stats) {
  CorruptionStats local;
  NoisyText nt(utf8_decode(text));
  run_typos(nt, cfg.typo_rate, cfg.typo_mix, kbd, rng, local);
  auto result = finish(nt, &local);
  if (stats) *stats += local;
  return result;
}

CorruptionResult corrupt_confusions(std::string_view text, const ConfusionTable& table, double rate,
                                    Rng& rng, CorruptionStats* stats) {
  CorruptionStats local;
  NoisyText nt(utf8_decode(text));
  run_confusions(nt, table, rate, {ErrorCategory::SimilarSounding, ErrorCategory::Punctuation}, rng,
                 local);
  auto result = finish(nt, &local);
  if (stats) *stats += local;
  return result;
}

CorruptionResult corrupt_gemination(std::string_view text, double rate, Rng& rng, CorruptionStats* stats) {
  CorruptionStats local;
  NoisyText nt(utf8_decode(text));
  run_gemination(nt, rate, rng, local);
  auto result = finish(nt, &local);
  if (stats) *stats += local;
  return result;
}

CorruptionResult corrupt_assimilation(std::string_view text, double rate, Rng& rng,
                                      CorruptionStats* stats) {
  CorruptionStats local;
  NoisyText nt(utf8_decode(text));
  run_assimilation(nt, rate, rng, local);
  auto result = finish(nt, &local);
  if (stats) *stats += local;
  return result;
}

CorruptionResult corrupt_casing(std::string_view text, double rate, Rng& rng, CorruptionStats* stats) {
  CorruptionStats local;
  NoisyText nt(utf8_decode(text));
  run_casing(nt, rate, rng, local);
  auto result = finish(nt, &local);
  if (stats) *stats += local;
  return result;
}

CorruptionResult corrupt_spaces(std::string_view text, double rate, Rng& rng, CorruptionStats* stats) {
  CorruptionStats local;
  NoisyText nt(utf8_decode(text));
  run_spaces(nt, rate, rng, local);
  auto result = finish(nt, &local);
  if (stats) *stats += local;
  return result;
}

CorruptionResult corrupt_rule_errors(std::string_view text, double rate, Rng& rng,
                                     CorruptionStats* stats) {
  CorruptionStats local;
  NoisyText nt(utf8_decode(text));
  run_rule_errors(nt, rate, rng, local);
  auto result = finish(nt, &local);
  if (stats) *stats += local;
  return result;
}

ParallelPair corrupt(const TextSample& sample, const CorruptionConfig& cfg,
                     const ConfusionTable& table, const KeyboardModel& kbd, CorruptionStats* stats) {
  CorruptionStats local;
  NoisyText nt(utf8_decode(sample.text));
  const auto& groups = cfg.enabled_groups;
  auto lane = [&](Lane l) { return Rng::for_sample(cfg.seed, sample.id, l); };

  if (groups.contains(ErrorCategory::Typographical)) {
    auto rng = lane(kTypos);
    run_typos(nt, cfg.typo_rate, cfg.typo_mix, kbd, rng, local);
  }
  if (groups.contains(ErrorCategory::SimilarSounding) || groups.contains(ErrorCategory::Punctuation)) {
    auto rng = lane(kConfusions);
    run_confusions(nt, table, cfg.confusion_rate, groups, rng, local);
  }
  if (groups.contains(ErrorCategory::AssimilationGemination)) {
    auto g = lane(kGemination);
    run_gemination(nt, cfg.other_rate, g, local);
    auto a = lane(kAssimilation);
    run_assimilation(nt, cfg.other_rate, a, local);
  }
  if (groups.contains(ErrorCategory::Casing)) {
    auto rng = lane(kCasing);
    run_casing(nt, cfg.other_rate, rng, local);
  }
  if (groups.contains(ErrorCategory::Spaces)) {
    auto rng = lane(kSpaces);
    run_spaces(nt, cfg.other_rate, rng, local);
  }
  if (cfg.rule_errors) {
    auto rng = lane(kRules);
    run_rule_errors(nt, cfg.rule_rate, rng, local);
  }

  ParallelPair pair{sample.id, utf8_encode(nt.text()), sample.text, nt.finish(&local)};
  if (stats) *stats += local;
  return pair;
}

}  // namespace litgec
