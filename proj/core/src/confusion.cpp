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

#include "litgec/confusion.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "litgec/error.hpp"
#include "litgec/text.hpp"

namespace litgec {

Pattern::Pattern(std::string source) : source_(std::move(source)) {
  try {
    const auto wide = to_wide(utf8_decode(source_));
    regex_ = std::make_shared<const std::wregex>(wide, std::regex::ECMAScript | std::regex::optimize);
  } catch (const std::regex_error& e) {
    throw Error(ErrorCode::InvalidConfig, "invalid pattern '" + source_ + "': " + e.what());
  }
}

std::vector<Span> Pattern::find_all(std::u32string_view text) const {
  const std::wstring wide = to_wide(text);
  std::vector<Span> out;
  for (std::wsregex_iterator it(wide.begin(), wide.end(), *regex_), end; it != end; ++it) {
    if (it->length(0) == 0) continue;
    const auto begin = static_cast<std::size_t>(it->position(0));
    out.push_back({begin, begin + static_cast<std::size_t>(it->length(0))});
  }
  return out;
}

bool Pattern::matches_fully(std::u32string_view text) const {
  const std::wstring wide = to_wide(text);
  return std::regex_match(wide, *regex_);
}

ConfusionGroup::ConfusionGroup(std::string pattern, std::vector<Variant> variants)
    : pattern_(std::move(pattern)), variants_(std::move(variants)) {
  bool letters = false;
  for (const auto& v : variants_) {
    decoded_.push_back(utf8_decode(v.surface));
    for (const char32_t c : decoded_.back()) {
      if (chars::is_letter(c)) letters = true;
      if (alphabet_.find(c) == std::u32string::npos) alphabet_.push_back(c);
    }
  }
  category_ = (letters || variants_.empty()) ? ErrorCategory::SimilarSounding
                                             : ErrorCategory::Punctuation;
}

std::vector<Variant> ConfusionGroup::replacements_for(std::u32string_view surface) const {
  std::vector<Variant> out;
  for (std::size_t k = 0; k < variants_.size(); ++k) {
    if (decoded_[k] != surface) out.push_back(variants_[k]);
  }
  return out;
}

bool ConfusionGroup::has_variant(std::u32string_view surface) const {
  return std::find(decoded_.begin(), decoded_.end(), surface) != decoded_.end();
}

const ConfusionTable& ConfusionTable::lithuanian_default() {
  static const ConfusionTable table([] {
    std::vector<ConfusionGroup> g;
    g.emplace_back(R"([,\.–]{0,1} )", std::vector<Variant>{
        {" ", 79'695'056}, {", ", 9'876'726}, {". ", 5'125'941}, {"– ", 1'347'515}});
    g.emplace_back(R"([\.,;:\–\-?!\(\)\[\]\<\>/])", std::vector<Variant>{
        {",", 10'072'919}, {".", 7'976'435}, {"–", 1'453'095}, {")", 665'253},
        {"(", 655'651},    {"-", 546'698},   {"?", 300'962},   {":", 519'928},
        {"!", 106'333},    {";", 105'526},   {"/", 90'778},    {"[", 34'295},
        {"]", 34'283},     {">", 5'759},     {"<", 4'457}});
    g.emplace_back("u{0,1}ou{0,1}", std::vector<Variant>{
        {"o", 33'058'916}, {"uo", 3'355'463}, {"ou", 41'509}, {"uou", 34}});
    g.emplace_back("ia|e", std::vector<Variant>{{"ia", 6'733'731}, {"e", 35'509'427}});
    g.emplace_back("[scz]", std::vector<Variant>{
        {"s", 47'349'069}, {"c", 2'645'328}, {"z", 1'646'823}});
    g.emplace_back("[ščž]", std::vector<Variant>{
        {"š", 7'002'598}, {"č", 2'619'317}, {"ž", 5'044'500}});
    g.emplace_back("[eęė]", std::vector<Variant>{
        {"e", 35'509'427}, {"ę", 1'336'170}, {"ė", 9'781'460}});
    g.emplace_back("[iįy]", std::vector<Variant>{
        {"į", 3'490'952}, {"y", 8'347'510}, {"i", 82'431'807}});
    g.emplace_back("[uųū]", std::vector<Variant>{
        {"ū", 2'795'974}, {"ų", 7'826'828}, {"u", 28'978'236}});
    g.emplace_back("[aą]", std::vector<Variant>{{"a", 68'291'558}, {"ą", 4'471'872}});
    g.emplace_back("[cč]", std::vector<Variant>{{"c", 2'645'328}, {"č", 2'619'317}});
    g.emplace_back("[zž]", std::vector<Variant>{{"z", 1'646'823}, {"ž", 5'044'500}});
    g.emplace_back("[td]", std::vector<Variant>{{"t", 35'864'854}, {"d", 14'822'144}});
    g.emplace_back("[kg]", std::vector<Variant>{{"k", 26'461'947}, {"g", 10'626'341}});
    g.emplace_back("[pb]", std::vector<Variant>{{"p", 16'187'509}, {"b", 8'148'725}});
    g.emplace_back(R"(‘‘|,,|[„“"”]|'')", std::vector<Variant>{
        {"\"", 436'378}, {"”", 46'847}, {",,", 11'777}, {"‘‘", 817}, {"''", 87}});
    return ConfusionTable(std::move(g));
  }());
  return table;
}

void ConfusionTable::validate() const {
  for (const auto& group : groups_) {
    for (const auto& v : group.variants()) {
      if (v.weight == 0) {
        throw Error(ErrorCode::InvalidConfig,
                    "zero weight for '" + v.surface + "' in " + group.pattern().source());
      }
      if (!group.pattern().matches_fully(utf8_decode(v.surface))) {
        throw Error(ErrorCode::InvalidConfig, "variant '" + v.surface +
                                                  "' is not matched by " + group.pattern().source());
      }
    }
  }
}

ConfusionTable ConfusionTable::parse(std::istream& in) {
  std::vector<ConfusionGroup> groups;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      const auto tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    const auto where = "confusion table line " + std::to_string(line_no) + ": ";
    if (fields.size() % 2 == 0) {
      throw Error(ErrorCode::ParseError, where + "expected pattern then variant/count pairs");
    }
    std::vector<Variant> variants;
    for (std::size_t k = 1; k + 1 < fields.size(); k += 2) {
      std::uint64_t weight = 0;
      const auto& num = fields[k + 1];
      if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos) {
        throw Error(ErrorCode::ParseError, where + "bad count '" + num + "'");
      }
      weight = std::stoull(num);
      variants.push_back({fields[k], weight});
    }
    if (!is_valid_utf8(line)) throw Error(ErrorCode::InvalidUtf8, where + "invalid UTF-8");
    groups.emplace_back(fields[0], std::move(variants));
  }
  return ConfusionTable(std::move(groups));
}

ConfusionTable ConfusionTable::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  auto table = parse(in);
  table.validate();
  return table;
}

void ConfusionTable::write(std::ostream& out) const {
  for (const auto& group : groups_) {
    out << group.pattern().source();
    for (const auto& v : group.variants()) out << '\t' << v.surface << '\t' << v.weight;
    out << '\n';
  }
}

void ConfusionTable::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  write(out);
}

namespace {

std::string visible(std::string_view s) {
  std::string out;
  for (const char c : s) {
    if (c == ' ') {
      out += "␣";
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::string with_thousands(std::uint64_t v) {
  std::string digits = std::to_string(v);
  std::string out;
  for (std::size_t k = 0; k < digits.size(); ++k) {
    if (k > 0 && (digits.size() - k) % 3 == 0) out.push_back(',');
    out.push_back(digits[k]);
  }
  return out;
}

std::string pad(std::string s, std::size_t width, bool right) {
  const std::size_t len = utf8_length(s);
  if (len >= width) return s;
  const std::string fill(width - len, ' ');
  return right ? fill + s : s + fill;
}

}  // namespace

std::string ConfusionTable::render() const {
  std::size_t pattern_width = 5;
  for (const auto& g : groups_) {
    pattern_width = std::max(pattern_width, utf8_length(visible(g.pattern().source())));
  }
  std::ostringstream out;
  out << pad("Group", pattern_width, false) << "  Matches and counts\n";
  for (const auto& g : groups_) {
    out << pad(visible(g.pattern().source()), pattern_width, false);
    for (const auto& v : g.variants()) {
      out << "  " << pad(visible(v.surface), 4, false) << pad(with_thousands(v.weight), 11, true);
    }
    out << '\n';
  }
  return out.str();
}

ConfusionCounter::ConfusionCounter(const std::vector<std::string>& patterns) {
  for (const auto& p : patterns) patterns_.emplace_back(p);
  counts_.resize(patterns_.size());
}

void ConfusionCounter::add(std::string_view text) {
  const auto t = utf8_decode(text);
  for (std::size_t g = 0; g < patterns_.size(); ++g) {
    auto& bucket = counts_[g];
    for (const auto& m : patterns_[g].find_all(t)) {
      auto surface = utf8_encode(std::u32string_view(t).substr(m.begin, m.end - m.begin));
      auto it = std::find_if(bucket.begin(), bucket.end(),
                             [&](const Variant& v) { return v.surface == surface; });
      if (it == bucket.end()) {
        bucket.push_back({std::move(surface), 1});
      } else {
        ++it->weight;
      }
    }
  }
}

ConfusionTable ConfusionCounter::table() const {
  std::vector<ConfusionGroup> groups;
  for (std::size_t g = 0; g < patterns_.size(); ++g) {
    auto variants = counts_[g];
    std::sort(variants.begin(), variants.end(), [](const Variant& a, const Variant& b) {
      return a.weight != b.weight ? a.weight > b.weight : a.surface < b.surface;
    });
    groups.emplace_back(patterns_[g].source(), std::move(variants));
  }
  return ConfusionTable(std::move(groups));
}

ConfusionTable derive_confusion_stats(const std::vector<TextSample>& corpus,
                                      const std::vector<std::string>& patterns) {
  ConfusionCounter counter(patterns);
  for (const auto& s : corpus) counter.add(s.text);
  return counter.table();
}

}  // namespace litgec
