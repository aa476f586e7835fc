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

#include "litgec/corrector.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "litgec/error.hpp"
#include "litgec/noiser.hpp"
#include "litgec/text.hpp"
#include "litgec/tokenstats.hpp"

namespace litgec {

std::string rule_correct(std::string_view text) { return clean_text(text); }

void UnigramModel::add_text(std::string_view text) {
  for (const auto& w : tokenize_words(text)) add_word(w);
}

void UnigramModel::add_word(std::string_view word, std::uint64_t count) {
  if (word.empty() || count == 0) return;
  const auto it = counts_.find(word);
  if (it == counts_.end()) {
    counts_.emplace(std::string(word), count);
  } else {
    it->second += count;
  }
  total_ += count;
}

std::uint64_t UnigramModel::count(std::string_view word) const {
  const auto it = counts_.find(word);
  return it == counts_.end() ? 0 : it->second;
}

double UnigramModel::probability(std::string_view word) const {
  return static_cast<double>(count(word) + 1) / static_cast<double>(total_ + counts_.size());
}

double UnigramModel::log_probability(std::string_view word) const {
  return std::log(static_cast<double>(count(word) + 1)) - std::log(static_cast<double>(total_ + counts_.size()));
}

void UnigramModel::write(std::ostream& out) const {
  out << "unigram\t" << total_ << '\t' << counts_.size() << '\n';
  for (const auto& [w, c] : counts_) out << w << '\t' << c << '\n';
}

void UnigramModel::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  write(out);
}

UnigramModel UnigramModel::read(std::istream& in) {
  auto fail = [](std::size_t line, const std::string& what) {
    throw Error(ErrorCode::ParseError, "model line " + std::to_string(line) + ": " + what);
  };
  auto number = [&](const std::string& s, std::size_t line) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) fail(line, "bad number '" + s + "'");
    try {
      return static_cast<std::uint64_t>(std::stoull(s));
    } catch (const std::exception&) {
      fail(line, "bad number '" + s + "'");
    }
    return std::uint64_t{0};
  };
  std::string line;
  if (!std::getline(in, line)) fail(1, "missing header");
  std::vector<std::string> head;
  {
    std::istringstream fields(line);
    std::string f;
    while (std::getline(fields, f, '\t')) head.push_back(f);
  }
  if (head.size() != 3 || head[0] != "unigram") fail(1, "expected 'unigram<TAB>total<TAB>V'");
  const auto total = number(head[1], 1);
  const auto vocab = number(head[2], 1);
  UnigramModel m;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto tab = line.rfind('\t');
    if (tab == std::string::npos || tab == 0) fail(line_no, "expected 'word<TAB>count'");
    const auto word = line.substr(0, tab);
    if (!is_valid_utf8(word)) fail(line_no, "invalid UTF-8");
    const auto c = number(line.substr(tab + 1), line_no);
    if (c == 0) fail(line_no, "counts must be positive");
    if (m.counts_.contains(word)) fail(line_no, "duplicate word '" + word + "'");
    m.add_word(word, c);
  }
  if (m.total_ != total || m.counts_.size() != vocab) fail(1, "header totals do not match the entries");
  return m;
}

UnigramModel UnigramModel::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open model " + path.string());
  return read(in);
}

UnigramModel build_unigram(const std::vector<TextSample>& corpus) {
  UnigramModel m;
  for (const auto& s : corpus) m.add_text(s.text);
  if (m.total() == 0) throw Error(ErrorCode::EmptyCorpus, "no words to count");
  return m;
}

void ChannelModel::validate() const {
  for (const double p : {typo, similar, casing}) {
    if (!(p > 0.0 && p < 1.0)) throw Error(ErrorCode::InvalidConfig, "channel probabilities must lie in (0, 1)");
  }
}

namespace {

// Letters an insertion candidate may add: the keyboard's letters plus the
// Lithuanian ones.
const std::u32string& insertion_alphabet(const KeyboardModel& kbd) {
  thread_local const KeyboardModel* cached_for = nullptr;
  thread_local std::u32string alphabet;
  if (cached_for != &kbd) {
    std::set<char32_t> all;
    for (const char32_t c : kbd.charset()) {
      if (chars::is_letter(c) && chars::is_lower(c)) all.insert(c);
    }
    for (const char32_t c : std::u32string_view(U"ąčęėįšųūž")) all.insert(c);
    alphabet.assign(all.begin(), all.end());
    cached_for = &kbd;
  }
  return alphabet;
}

}  // namespace

std::vector<Candidate> candidates(std::string_view word, const ConfusionTable& table, const KeyboardModel& kbd,
                                  bool case_flip) {
  const auto w = utf8_decode(word);
  std::vector<Candidate> out;
  std::unordered_set<std::u32string> seen;
  auto push = [&](std::u32string text, CandidateKind kind) {
    if (seen.insert(text).second) out.push_back({utf8_encode(text), kind});
  };
  push(w, CandidateKind::Identity);

  for (const auto& g : table.groups()) {
    if (g.category() != ErrorCategory::SimilarSounding) continue;
    for (const auto& m : g.pattern().find_all(w)) {
      const auto surface = std::u32string_view(w).substr(m.begin, m.end - m.begin);
      for (const auto& v : g.replacements_for(surface)) {
        std::u32string c = w.substr(0, m.begin) + utf8_decode(v.surface) + w.substr(m.end);
        push(std::move(c), CandidateKind::Confusion);
      }
    }
  }

  for (std::size_t i = 0; i < w.size(); ++i) {
    for (const auto& n : kbd.neighbors(w[i])) {
      if (n.weight <= 0.0) continue;
      std::u32string c = w;
      c[i] = n.ch;
      push(std::move(c), CandidateKind::Keyboard);
    }
  }
  if (w.size() > 1) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      push(w.substr(0, i) + w.substr(i + 1), CandidateKind::Keyboard);
    }
  }
  const auto& alphabet = insertion_alphabet(kbd);
  for (std::size_t g = 0; g <= w.size(); ++g) {
    for (const char32_t a : alphabet) {
      const bool upper_context = g > 0 && chars::is_upper(w[g - 1]) && (g == w.size() || chars::is_upper(w[g]));
      std::u32string c = w.substr(0, g);
      c.push_back(upper_context ? chars::to_upper(a) : a);
      c += w.substr(g);
      push(std::move(c), CandidateKind::Keyboard);
    }
  }
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == w[i + 1]) continue;
    std::u32string c = w;
    std::swap(c[i], c[i + 1]);
    push(std::move(c), CandidateKind::Keyboard);
  }

  if (case_flip && !w.empty() && chars::is_letter(w[0])) {
    std::u32string c = w;
    c[0] = chars::is_upper(w[0]) ? chars::to_lower(w[0]) : chars::to_upper(w[0]);
    if (c != w) push(std::move(c), CandidateKind::Casing);
  }
  return out;
}

double channel_log_probability(const Candidate& c, std::size_t observed_length, const ChannelModel& channel) {
  const double keep = std::log(channel.keep());
  const double n = static_cast<double>(std::max<std::size_t>(observed_length, 1));
  switch (c.kind) {
    case CandidateKind::Identity: return n * keep;
    case CandidateKind::Confusion: return std::log(channel.similar) + (n - 1.0) * keep;
    case CandidateKind::Keyboard: return std::log(channel.typo) + (n - 1.0) * keep;
    case CandidateKind::Casing: return std::log(channel.casing) + (n - 1.0) * keep;
  }
  return -std::numeric_limits<double>::infinity();
}

std::string correct_word(std::string_view word, const UnigramModel& model, const ChannelModel& channel,
                         const ConfusionTable& table, const KeyboardModel& kbd, bool case_flip) {
  const auto cands = candidates(word, table, kbd, case_flip);
  const std::size_t len = utf8_length(word);
  const Candidate* best = &cands.front();
  double best_score = model.log_probability(best->text) + channel_log_probability(*best, len, channel);
  for (std::size_t k = 1; k < cands.size(); ++k) {
    const auto& c = cands[k];
    const double s = model.log_probability(c.text) + channel_log_probability(c, len, channel);
    if (s > best_score || (s == best_score && best != &cands.front() && c.text < best->text)) {
      best = &c;
      best_score = s;
    }
  }
  return best->text;
}

std::string noisy_channel_correct(std::string_view text, const UnigramModel& model, const ChannelModel& channel,
                                  const ConfusionTable& table, const KeyboardModel& kbd) {
  const auto u = utf8_decode(rule_correct(text));
  std::u32string out;
  out.reserve(u.size());
  std::size_t i = 0;
  while (i < u.size()) {
    if (chars::is_space(u[i])) {
      out.push_back(u[i++]);
      continue;
    }
    std::size_t j = i;
    while (j < u.size() && !chars::is_space(u[j])) ++j;
    std::size_t b = i;
    std::size_t e = j;
    while (b < e && chars::is_punct(u[b])) ++b;
    while (e > b && chars::is_punct(u[e - 1])) --e;
    out.append(u, i, b - i);
    if (b < e) {
      const bool initial = detail::sentence_initial(u, b);
      out += utf8_decode(correct_word(utf8_encode(std::u32string_view(u).substr(b, e - b)), model, channel, table,
                                      kbd, !initial));
    }
    out.append(u, e, j - e);
    i = j;
  }
  return utf8_encode(out);
}

}  // namespace litgec
