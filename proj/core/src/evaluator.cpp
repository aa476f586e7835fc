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

#include "litgec/evaluator.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>
#include <tuple>

#include "litgec/align.hpp"
#include "litgec/error.hpp"
#include "litgec/noiser.hpp"
#include "litgec/text.hpp"

namespace litgec {

double f_beta(double precision, double recall, double beta) noexcept {
  const double b2 = beta * beta;
  const double num = (1.0 + b2) * precision * recall;
  if (num <= 0.0) return 0.0;
  return num / (b2 * precision + recall);
}

namespace {

std::u32string strip_space(std::u32string_view s) {
  std::u32string out;
  for (const char32_t c : s) {
    if (!chars::is_space(c)) out.push_back(c);
  }
  return out;
}

bool punctuation_only(std::u32string_view s, const ConfusionTable& table) {
  // Quote glyphs the cleaner produces or rewrites count alongside the table.
  static constexpr std::u32string_view kQuotes = U"„“”‘’'\"`,";
  for (const char32_t c : s) {
    if (c == U' ' || kQuotes.find(c) != std::u32string_view::npos) continue;
    bool found = false;
    for (const auto& g : table.groups()) {
      if (g.category() == ErrorCategory::Punctuation && g.alphabet().find(c) != std::u32string::npos) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool geminate_pair(char32_t x, char32_t y) {
  return (x == y && chars::is_consonant(x)) ||
         (detail::in_sibilant_group(x) && detail::in_sibilant_group(y));
}

bool assimilation_like(std::u32string_view src, std::u32string_view ref, std::u32string_view source,
                       std::size_t s, std::size_t e) {
  if (src.size() == 1 && ref.size() == 1 && detail::voicing_counterpart(src[0]) == ref[0] && src[0] != ref[0] &&
      e < source.size()) {
    const char32_t next = source[e];
    return (detail::is_voiced(ref[0]) && detail::is_voiceless(next)) ||
           (detail::is_voiceless(ref[0]) && detail::is_voiced(next));
  }
  if (src.empty() && ref.size() == 1) {
    const char32_t x = ref[0];
    if (s > 0 && geminate_pair(x, source[s - 1])) return true;
    if (s < source.size() && geminate_pair(x, source[s])) return true;
  }
  return false;
}

bool similar_sounding(std::u32string_view src, std::u32string_view ref, std::u32string_view source,
                      std::size_t s, std::size_t e, const ConfusionTable& table) {
  constexpr std::size_t kReach = 4;
  const std::size_t lo = s > kReach ? s - kReach : 0;
  const std::size_t hi = std::min(source.size(), e + kReach);
  const auto local = source.substr(lo, hi - lo);
  for (const auto& g : table.groups()) {
    if (g.category() != ErrorCategory::SimilarSounding) continue;
    const auto& pat = g.pattern();
    if (!src.empty() && pat.matches_fully(src) && pat.matches_fully(ref)) return true;
    for (const auto& m : pat.find_all(local)) {
      const std::size_t mb = m.begin + lo;
      const std::size_t me = m.end + lo;
      const bool touches = s == e ? (mb <= s && s <= me) : (mb < e && s < me);
      if (!touches) continue;
      const std::size_t wb = std::min(mb, s);
      const std::size_t we = std::max(me, e);
      const auto win_src = source.substr(wb, we - wb);
      std::u32string win_ref(source.substr(wb, s - wb));
      win_ref += ref;
      win_ref += source.substr(e, we - e);
      if (win_ref != win_src && pat.matches_fully(win_src) && pat.matches_fully(win_ref)) return true;
    }
  }
  return false;
}

}  // namespace

ErrorCategory classify_edit(const Edit& edit, std::u32string_view source, const ConfusionTable& table) {
  if (edit.src_start > edit.src_end || edit.src_end > source.size()) {
    throw Error(ErrorCode::InvalidInput, "edit span outside the source");
  }
  const std::size_t s = edit.src_start;
  const std::size_t e = edit.src_end;
  const auto src = source.substr(s, e - s);
  const std::u32string ref = utf8_decode(edit.replacement);
  if (src.size() != ref.size() && strip_space(src) == strip_space(ref)) return ErrorCategory::Spaces;
  if (src != ref && to_lower(src) == to_lower(ref)) return ErrorCategory::Casing;
  if (punctuation_only(src, table) && punctuation_only(ref, table)) return ErrorCategory::Punctuation;
  if (assimilation_like(src, ref, source, s, e)) return ErrorCategory::AssimilationGemination;
  if (similar_sounding(src, ref, source, s, e, table)) return ErrorCategory::SimilarSounding;
  return ErrorCategory::Typographical;
}

ErrorCategory classify_edit(const Edit& edit, std::string_view source, const ConfusionTable& table) {
  return classify_edit(edit, std::u32string_view(utf8_decode(source)), table);
}

EvalReport& EvalReport::operator+=(const EvalReport& o) noexcept {
  pairs += o.pairs;
  total += o.total;
  for (std::size_t k = 0; k < per_category.size(); ++k) per_category[k] += o.per_category[k];
  return *this;
}

EvalReport score_pair(const ParallelPair& gold, std::string_view hypothesis, double beta,
                      const ConfusionTable& table) {
  EvalReport r;
  r.beta = beta;
  r.pairs = 1;
  const auto source = utf8_decode(gold.source);
  const auto hyp_edits = extract_edits(std::u32string_view(source), std::u32string_view(utf8_decode(hypothesis)));

  using Key = std::tuple<std::size_t, std::size_t, std::string>;
  std::multimap<Key, ErrorCategory> open;
  for (const auto& g : gold.gold_edits) open.emplace(Key{g.src_start, g.src_end, g.replacement}, g.category);

  auto bucket = [&](ErrorCategory c) -> Counts& { return r.per_category[static_cast<std::size_t>(c)]; };
  for (const auto& h : hyp_edits) {
    const auto it = open.find(Key{h.src_start, h.src_end, h.replacement});
    if (it != open.end()) {
      ++r.total.tp;
      ++bucket(it->second).tp;
      open.erase(it);
    } else {
      ++r.total.fp;
      ++bucket(classify_edit(h, std::u32string_view(source), table)).fp;
    }
  }
  for (const auto& [key, cat] : open) {
    ++r.total.fn;
    ++bucket(cat).fn;
  }
  if (!gold.gold_edits.empty()) r.total.samples = 1;
  for (const auto& g : gold.gold_edits) bucket(g.category).samples = 1;
  return r;
}

EvalReport score(const std::vector<ParallelPair>& gold, const std::vector<std::string>& hypotheses, double beta,
                 const ConfusionTable& table) {
  if (gold.size() != hypotheses.size()) {
    throw Error(ErrorCode::LengthMismatch, std::to_string(gold.size()) + " gold pairs but " +
                                               std::to_string(hypotheses.size()) + " hypotheses");
  }
  EvalReport r;
  r.beta = beta;
  for (std::size_t k = 0; k < gold.size(); ++k) r += score_pair(gold[k], hypotheses[k], beta, table);
  return r;
}

EvalReport score(const std::vector<ParallelPair>& gold, const std::vector<TextSample>& hypotheses, double beta,
                 const ConfusionTable& table) {
  if (gold.size() != hypotheses.size()) {
    throw Error(ErrorCode::LengthMismatch, std::to_string(gold.size()) + " gold pairs but " +
                                               std::to_string(hypotheses.size()) + " hypotheses");
  }
  std::vector<std::string> texts;
  texts.reserve(hypotheses.size());
  for (std::size_t k = 0; k < gold.size(); ++k) {
    if (gold[k].id != hypotheses[k].id) {
      throw Error(ErrorCode::InvalidInput, "record " + std::to_string(k + 1) + ": gold id '" + gold[k].id +
                                               "' but hypothesis id '" + hypotheses[k].id + "'");
    }
    texts.push_back(hypotheses[k].text);
  }
  return score(gold, texts, beta, table);
}

std::string EvalReport::render() const {
  std::ostringstream out;
  char line[160];
  auto row = [&](std::string_view label, const Counts& c) {
    // Labels are mostly ASCII; pad by code points so columns line up.
    std::string name(label);
    const std::size_t width = utf8_length(name);
    if (width < 26) name.append(26 - width, ' ');
    std::snprintf(line, sizeof line, "%s %7.4f %9zu %7.4f %7.4f %8zu %8zu %8zu\n", name.c_str(), c.f(beta),
                  c.samples, c.precision(), c.recall(), c.tp, c.fp, c.fn);
    out << line;
  };
  char f_label[32];
  std::snprintf(f_label, sizeof f_label, "F%g", beta);
  std::snprintf(line, sizeof line, "%-26s %7s %9s %7s %7s %8s %8s %8s\n", "Category", f_label, "#samples", "P", "R",
                "TP", "FP", "FN");
  out << line;
  for (const auto c : kAllCategories) {
    const auto& counts = category(c);
    if (c == ErrorCategory::Other && counts == Counts{}) continue;
    row(display_name(c), counts);
  }
  row("All", total);
  std::snprintf(line, sizeof line, "beta = %g, pairs = %zu\n", beta, pairs);
  out << line;
  return out.str();
}

std::string EvalReport::to_json() const {
  auto counts = [&](const Counts& c) {
    nlohmann::ordered_json j;
    j["tp"] = c.tp;
    j["fp"] = c.fp;
    j["fn"] = c.fn;
    j["samples"] = c.samples;
    j["precision"] = c.precision();
    j["recall"] = c.recall();
    j["f_beta"] = c.f(beta);
    return j;
  };
  nlohmann::ordered_json j;
  j["beta"] = beta;
  j["pairs"] = pairs;
  j["samples_affected"] = total.samples;
  j["tp"] = total.tp;
  j["fp"] = total.fp;
  j["fn"] = total.fn;
  j["precision"] = precision();
  j["recall"] = recall();
  j["f_beta"] = f();
  auto& cats = j["per_category"] = nlohmann::ordered_json::object();
  for (const auto c : kAllCategories) cats[std::string(to_string(c))] = counts(category(c));
  return j.dump(2);
}

}  // namespace litgec
