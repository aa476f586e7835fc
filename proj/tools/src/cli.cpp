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

#include "cli.hpp"

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <nlohmann/json.hpp>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "litgec/confusion.hpp"
#include "litgec/corpus.hpp"
#include "litgec/corpus_io.hpp"
#include "litgec/corrector.hpp"
#include "litgec/error.hpp"
#include "litgec/evaluator.hpp"
#include "litgec/keyboard.hpp"
#include "litgec/m2.hpp"
#include "litgec/noiser.hpp"
#include "litgec/pairs_io.hpp"
#include "litgec/text.hpp"
#include "litgec/tokenstats.hpp"
#include "parallel.hpp"

namespace litgec::cli {

namespace fs = std::filesystem;

namespace {

constexpr std::size_t kBatch = 4096;

unsigned worker_count(int jobs) {
  if (jobs > 0) return static_cast<unsigned>(jobs);
  return std::max(1u, std::thread::hardware_concurrency());
}

std::ifstream open_in(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return in;
}

// Output goes to a file when a path is given and to `fallback` otherwise.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
      if (!*file_) throw Error(ErrorCode::IoError, "cannot write " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }
  void close() {
    stream_->flush();
    if (file_ && !*file_) throw Error(ErrorCode::IoError, "write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

void require_distinct(const std::string& in, const std::string& out) {
  if (in.empty() || out.empty()) return;
  std::error_code ec;
  if (fs::weakly_canonical(in, ec) == fs::weakly_canonical(out, ec)) {
    throw Error(ErrorCode::InvalidConfig, "input and output must be different files");
  }
}

// Reads a corpus in batches; JSON lines or blank-line separated paragraphs.
template <typename Fn>
std::size_t for_each_batch(const std::string& path, Fn fn) {
  auto in = open_in(path);
  SampleReader reader(in, guess_format(path));
  std::vector<TextSample> batch;
  std::size_t total = 0;
  while (auto s = reader.next()) {
    batch.push_back(std::move(*s));
    if (batch.size() == kBatch) {
      total += batch.size();
      fn(batch);
      batch.clear();
    }
  }
  if (!batch.empty()) {
    total += batch.size();
    fn(batch);
  }
  return total;
}

// JSON-lines records whose text comes from the first present field.
std::vector<TextSample> read_records(const std::string& path, const std::vector<std::string>& fields) {
  auto in = open_in(path);
  std::vector<TextSample> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(std::string_view(line)).empty()) continue;
    const auto where = path + " line " + std::to_string(line_no) + ": ";
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, where + e.what());
    }
    if (!j.is_object()) throw Error(ErrorCode::ParseError, where + "expected an object");
    TextSample s;
    if (j.contains("id") && j["id"].is_string()) {
      s.id = j["id"].get<std::string>();
    } else if (j.contains("id") && j["id"].is_number_integer()) {
      s.id = std::to_string(j["id"].get<long long>());
    } else {
      s.id = std::to_string(line_no);
    }
    bool found = false;
    for (const auto& f : fields) {
      if (j.contains(f) && j[f].is_string()) {
        s.text = j[f].get<std::string>();
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorCode::ParseError, where + "no string field '" + fields.front() + "'");
    out.push_back(std::move(s));
  }
  return out;
}

bool is_jsonl(const std::string& path) { return guess_format(path) == CorpusFormat::JsonLines; }

std::string sample_text_line(const std::string& id, const std::string& text) {
  nlohmann::ordered_json j;
  j["id"] = id;
  j["text"] = text;
  return j.dump();
}

ConfusionTable load_table(const std::string& path) {
  if (path.empty()) return ConfusionTable::lithuanian_default();
  auto t = ConfusionTable::load(path);
  t.validate();
  return t;
}

KeyboardModel load_keyboard(const std::string& path) {
  return path.empty() ? KeyboardModel::qwerty() : KeyboardModel::load(path);
}

std::set<std::string> split_names(const std::vector<std::string>& values) {
  std::set<std::string> names;
  for (const auto& v : values) {
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) names.insert(item);
    }
  }
  return names;
}

// --- preprocess -----------------------------------------------------------

struct PreprocessOptions {
  std::string input, output, summary_json;
  std::size_t min_chars = 20;
  double min_letter_fraction = 0.98;
  double space_ratio = 0.02;
  std::string space_mode = "minimum";
  std::string extra_chars = "€₤$%wx";
  std::size_t max_chars = 2100;
  bool no_dedupe = false;
  int jobs = 1;
};

int cmd_preprocess(const PreprocessOptions& o, std::ostream& out, std::ostream& err) {
  require_distinct(o.input, o.output);
  FilterConfig cfg;
  cfg.min_chars = o.min_chars;
  cfg.min_letter_fraction = o.min_letter_fraction;
  cfg.space_ratio_bound = o.space_ratio;
  cfg.space_ratio_mode = o.space_mode == "maximum" ? SpaceRatioMode::Maximum : SpaceRatioMode::Minimum;
  cfg.extra_allowed_chars = utf8_decode(o.extra_chars);
  cfg.validate();

  std::map<FilterReason, std::size_t> reasons;
  std::size_t pieces = 0;
  Deduplicator seen;
  Sink sink(o.output, out);
  const auto total = for_each_batch(o.input, [&](const std::vector<TextSample>& batch) {
    auto cleaned = parallel_map(batch, worker_count(o.jobs), [&](const TextSample& s) {
      auto c = preprocess(s);
      const auto verdict = filter(c, cfg);
      return std::pair{std::move(c), verdict};
    });
    for (auto& [sample, verdict] : cleaned) {
      if (!verdict.keep) {
        ++reasons[verdict.reason];
        continue;
      }
      if (!o.no_dedupe && !seen.admit(sample)) {
        ++reasons[FilterReason::Duplicate];
        continue;
      }
      ++reasons[FilterReason::Kept];
      if (o.max_chars > 0 && utf8_length(sample.text) > o.max_chars) {
        const auto parts = split_long(sample.text, o.max_chars).pieces;
        for (std::size_t k = 0; k < parts.size(); ++k) {
          sink.get() << to_json_line(TextSample{sample.id + "-" + std::to_string(k + 1), parts[k], sample.source})
                     << '\n';
          ++pieces;
        }
      } else {
        sink.get() << to_json_line(sample) << '\n';
        ++pieces;
      }
    }
  });
  sink.close();
  if (total == 0) throw Error(ErrorCode::EmptyCorpus, "no samples in " + o.input);

  // Keep the summary off stdout when stdout carries the corpus.
  std::ostream& report = o.output.empty() ? err : out;
  nlohmann::ordered_json summary;
  summary["read"] = total;
  for (const auto r : {FilterReason::Kept, FilterReason::TooShort, FilterReason::LowLetterFraction,
                       FilterReason::SpaceRatio, FilterReason::Duplicate}) {
    summary[std::string(to_string(r))] = reasons[r];
  }
  summary["written"] = pieces;
  for (const auto& [key, value] : summary.items()) report << key << '\t' << value.get<std::size_t>() << '\n';
  if (!o.summary_json.empty()) {
    Sink js(o.summary_json, out);
    js.get() << summary.dump(2) << '\n';
    js.close();
  }
  return 0;
}

// --- corrupt ----------------------------------------------------------------

struct CorruptOptions {
  std::string input, output, format, keyboard, table, report_json;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> groups;
  double typo_rate = 0.02, confusion_rate = 0.02, other_rate = 0.02, rule_rate = 0.02;
  int jobs = 1;
};

CorruptionConfig corruption_config(const CorruptOptions& o) {
  CorruptionConfig cfg;
  cfg.seed = *o.seed;
  cfg.typo_rate = o.typo_rate;
  cfg.confusion_rate = o.confusion_rate;
  cfg.other_rate = o.other_rate;
  cfg.rule_rate = o.rule_rate;
  if (!o.groups.empty()) {
    static const std::map<std::string, ErrorCategory> kNames = {
        {"typos", ErrorCategory::Typographical},
        {"punctuation", ErrorCategory::Punctuation},
        {"similar", ErrorCategory::SimilarSounding},
        {"spaces", ErrorCategory::Spaces},
        {"assimilation", ErrorCategory::AssimilationGemination},
        {"gemination", ErrorCategory::AssimilationGemination},
        {"casing", ErrorCategory::Casing},
    };
    cfg.enabled_groups.clear();
    for (const auto& name : split_names(o.groups)) {
      if (name == "all") {
        cfg.enabled_groups.insert(kDefaultGroups.begin(), kDefaultGroups.end());
      } else if (name == "rules") {
        cfg.rule_errors = true;
      } else if (const auto it = kNames.find(name); it != kNames.end()) {
        cfg.enabled_groups.insert(it->second);
      } else {
        throw Error(ErrorCode::InvalidConfig, "unknown group '" + name +
                                                  "' (typos, punctuation, similar, spaces, assimilation, casing, "
                                                  "rules, all)");
      }
    }
  }
  cfg.validate();
  return cfg;
}

nlohmann::ordered_json stats_json(const CorruptionStats& st, std::size_t samples) {
  auto family = [](const FamilyStats& f) {
    nlohmann::ordered_json j;
    j["eligible"] = f.eligible;
    j["applied"] = f.applied;
    j["rate"] = f.eligible ? static_cast<double>(f.applied) / static_cast<double>(f.eligible) : 0.0;
    return j;
  };
  nlohmann::ordered_json j;
  j["samples"] = samples;
  j["typos"] = family(st.typos);
  j["confusions"] = family(st.confusions);
  j["gemination"] = family(st.gemination);
  j["assimilation"] = family(st.assimilation);
  j["casing"] = family(st.casing);
  j["spaces"] = family(st.spaces);
  j["rules"] = family(st.rules);
  j["typo_ops"] = {{"substitution", st.typo_ops[0]},
                   {"deletion", st.typo_ops[1]},
                   {"insertion", st.typo_ops[2]},
                   {"transposition", st.typo_ops[3]}};
  auto& cats = j["edits"] = nlohmann::ordered_json::object();
  for (const auto c : kAllCategories) cats[std::string(to_string(c))] = st.edits_by_category[static_cast<std::size_t>(c)];
  return j;
}

int cmd_corrupt(const CorruptOptions& o, std::ostream& out) {
  require_distinct(o.input, o.output);
  if (!o.seed) throw Error(ErrorCode::InvalidConfig, "corrupt needs --seed");
  const auto cfg = corruption_config(o);
  const auto table = load_table(o.table);
  const auto kbd = load_keyboard(o.keyboard);
  const std::string format =
      !o.format.empty() ? o.format : (fs::path(o.output).extension() == ".m2" ? "m2" : "jsonl");
  if (format != "jsonl" && format != "m2") throw Error(ErrorCode::InvalidConfig, "unknown format '" + format + "'");

  Sink sink(o.output, out);
  CorruptionStats totals;
  bool first_block = true;
  const auto total = for_each_batch(o.input, [&](const std::vector<TextSample>& batch) {
    auto results = parallel_map(batch, worker_count(o.jobs), [&](const TextSample& s) {
      CorruptionStats st;
      auto pair = corrupt(s, cfg, table, kbd, &st);
      return std::pair{std::move(pair), st};
    });
    std::vector<ParallelPair> pairs;
    for (auto& [pair, st] : results) {
      totals += st;
      pairs.push_back(std::move(pair));
    }
    if (format == "m2") {
      if (!first_block) sink.get() << '\n';
      write_m2(sink.get(), pairs);
    } else {
      write_pairs(sink.get(), pairs);
    }
    first_block = false;
  });
  sink.close();
  if (total == 0) throw Error(ErrorCode::EmptyCorpus, "no samples in " + o.input);
  if (!o.report_json.empty()) {
    Sink js(o.report_json, out);
    js.get() << stats_json(totals, total).dump(2) << '\n';
    js.close();
  }
  return 0;
}

// --- evaluate ---------------------------------------------------------------

struct EvaluateOptions {
  std::string gold, hyp, hyp_field = "text", json, table;
  double beta = 0.5;
};

int cmd_evaluate(const EvaluateOptions& o, std::ostream& out) {
  if (!(o.beta > 0.0)) throw Error(ErrorCode::InvalidConfig, "--beta must be positive");
  const auto table = load_table(o.table);
  const auto gold = fs::path(o.gold).extension() == ".m2" ? read_m2(fs::path(o.gold)) : read_pairs(fs::path(o.gold));
  EvalReport report;
  if (is_jsonl(o.hyp)) {
    report = score(gold, read_records(o.hyp, {o.hyp_field}), o.beta, table);
  } else {
    auto in = open_in(o.hyp);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(std::move(line));
    }
    report = score(gold, lines, o.beta, table);
  }
  out << report.render();
  if (!o.json.empty()) {
    Sink js(o.json, out);
    js.get() << report.to_json() << '\n';
    js.close();
  }
  return 0;
}

// --- stats ------------------------------------------------------------------

struct StatsOptions {
  std::string input, json;
  std::vector<std::string> tokenizers;
  std::size_t max_chars = 0;
  int jobs = 1;
};

int cmd_stats(const StatsOptions& o, std::ostream& out) {
  std::vector<std::unique_ptr<Tokenizer>> toks;
  auto names = o.tokenizers.empty() ? std::vector<std::string>{"all"} : o.tokenizers;
  std::vector<std::string> expanded;
  for (const auto& n : names) {
    std::stringstream ss(n);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item == "all") {
        for (const auto& t : tokenizer_names()) expanded.push_back(t);
      } else if (!item.empty()) {
        expanded.push_back(item);
      }
    }
  }
  for (const auto& n : expanded) toks.push_back(make_tokenizer(n));

  const std::optional<std::size_t> split = o.max_chars ? std::optional(o.max_chars) : std::nullopt;
  std::vector<RunningStats> running(toks.size());
  std::vector<std::size_t> totals(toks.size(), 0);
  for_each_batch(o.input, [&](const std::vector<TextSample>& batch) {
    // Per sample: token counts of every piece under every tokenizer.
    auto counts = parallel_map(batch, worker_count(o.jobs), [&](const TextSample& s) {
      std::vector<std::string> pieces;
      if (split && utf8_length(s.text) > *split) {
        pieces = split_long(s.text, *split).pieces;
      } else {
        pieces.push_back(s.text);
      }
      std::vector<std::vector<std::size_t>> per_tok(toks.size());
      for (std::size_t t = 0; t < toks.size(); ++t) {
        for (const auto& p : pieces) per_tok[t].push_back(toks[t]->count(p));
      }
      return per_tok;
    });
    for (const auto& per_tok : counts) {
      for (std::size_t t = 0; t < toks.size(); ++t) {
        for (const auto n : per_tok[t]) {
          running[t].add(static_cast<double>(n));
          totals[t] += n;
        }
      }
    }
  });
  std::vector<TokenStatsReport> reports;
  for (std::size_t t = 0; t < toks.size(); ++t) {
    if (running[t].count() == 0) throw Error(ErrorCode::EmptyCorpus, "no samples in " + o.input);
    reports.push_back({std::string(toks[t]->name()), running[t].count(), running[t].mean(), running[t].stddev(),
                       totals[t], toks[t]->render(kProbeSentence)});
  }
  out << render_stats(reports);
  if (!o.json.empty()) {
    Sink js(o.json, out);
    js.get() << stats_to_json(reports) << '\n';
    js.close();
  }
  return 0;
}

// --- correct ----------------------------------------------------------------

struct CorrectOptions {
  std::string input, output, model, keyboard, table;
  bool rules_only = false;
  int jobs = 1;
};

int cmd_correct(const CorrectOptions& o, std::ostream& out) {
  require_distinct(o.input, o.output);
  if (o.model.empty() && !o.rules_only) {
    throw Error(ErrorCode::InvalidConfig, "correct needs --model or --rules-only");
  }
  std::optional<UnigramModel> model;
  if (!o.rules_only) model = UnigramModel::load(o.model);
  const auto table = load_table(o.table);
  const auto kbd = load_keyboard(o.keyboard);
  const ChannelModel channel;
  const auto records = read_records(o.input, {"source", "text"});
  const auto fixed = parallel_map(records, worker_count(o.jobs), [&](const TextSample& s) {
    return model ? noisy_channel_correct(s.text, *model, channel, table, kbd) : rule_correct(s.text);
  });
  Sink sink(o.output, out);
  for (std::size_t k = 0; k < records.size(); ++k) sink.get() << sample_text_line(records[k].id, fixed[k]) << '\n';
  sink.close();
  return 0;
}

// --- derive-stats / build-model ------------------------------------------------

struct DeriveOptions {
  std::string input, output;
  std::vector<std::string> patterns;
};

int cmd_derive_stats(const DeriveOptions& o, std::ostream& out) {
  require_distinct(o.input, o.output);
  auto patterns = o.patterns;
  if (patterns.empty()) {
    for (const auto& g : ConfusionTable::lithuanian_default().groups()) patterns.push_back(g.pattern().source());
  }
  ConfusionCounter counter(patterns);
  for_each_batch(o.input, [&](const std::vector<TextSample>& batch) {
    for (const auto& s : batch) counter.add(s.text);
  });
  const auto table = counter.table();
  if (!o.output.empty()) table.save(o.output);
  out << table.render();
  return 0;
}

struct BuildModelOptions {
  std::string input, output;
};

int cmd_build_model(const BuildModelOptions& o, std::ostream& out) {
  require_distinct(o.input, o.output);
  UnigramModel model;
  for_each_batch(o.input, [&](const std::vector<TextSample>& batch) {
    for (const auto& s : batch) model.add_text(s.text);
  });
  if (model.total() == 0) throw Error(ErrorCode::EmptyCorpus, "no words in " + o.input);
  model.save(o.output);
  out << "words\t" << model.total() << "\nvocabulary\t" << model.vocabulary_size() << '\n';
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Corpus cleaning, synthetic error generation and edit-level evaluation for Lithuanian GEC",
               "litgec"};
  app.set_config("--config", "", "INI file with option defaults; command line flags take precedence");
  app.require_subcommand(1);
  app.set_version_flag("--version", "litgec 0.1.0");

  PreprocessOptions pre;
  auto* p = app.add_subcommand("preprocess", "Clean, filter, deduplicate and split a raw corpus");
  p->add_option("-i,--input", pre.input, "Raw corpus (.jsonl or plain text paragraphs)")->required();
  p->add_option("-o,--output", pre.output, "Clean corpus (.jsonl); stdout when omitted");
  p->add_option("--min-chars", pre.min_chars, "Minimum sample length")->capture_default_str();
  p->add_option("--min-letter-fraction", pre.min_letter_fraction, "Minimum share of allowed characters")
      ->capture_default_str();
  p->add_option("--space-ratio", pre.space_ratio, "Space to non-space ratio bound")->capture_default_str();
  p->add_option("--space-mode", pre.space_mode, "Whether the bound is a minimum or a maximum")
      ->check(CLI::IsMember({"minimum", "maximum"}))
      ->capture_default_str();
  p->add_option("--extra-chars", pre.extra_chars, "Extra characters counted as allowed")->capture_default_str();
  p->add_option("--max-chars", pre.max_chars, "Split longer samples (0 disables)")->capture_default_str();
  p->add_flag("--no-dedupe", pre.no_dedupe, "Keep duplicate samples");
  p->add_option("--summary-json", pre.summary_json, "Write the summary counts as JSON");
  p->add_option("-j,--jobs", pre.jobs, "Worker threads (0 = all cores)")->capture_default_str();

  CorruptOptions cor;
  auto* c = app.add_subcommand("corrupt", "Inject synthetic errors and write parallel pairs");
  c->add_option("-i,--input", cor.input, "Clean corpus")->required();
  c->add_option("-o,--output", cor.output, "Pairs (.jsonl or .m2); stdout when omitted");
  c->add_option("--seed", cor.seed, "Random seed");
  c->add_option("--groups", cor.groups,
                "Error families: typos, punctuation, similar, spaces, assimilation, casing, rules, all")
      ->delimiter(',');
  c->add_option("--typo-rate", cor.typo_rate, "Per-character typo probability")->capture_default_str();
  c->add_option("--confusion-rate", cor.confusion_rate, "Per-match confusion probability")->capture_default_str();
  c->add_option("--other-rate", cor.other_rate, "Per-match probability of the rule families")->capture_default_str();
  c->add_option("--rule-rate", cor.rule_rate, "Per-site probability of cleaning-rule errors")->capture_default_str();
  c->add_option("--keyboard", cor.keyboard, "Keyboard weight file (from to weight)");
  c->add_option("--confusion-table", cor.table, "Confusion table file");
  c->add_option("--format", cor.format, "Output format")->check(CLI::IsMember({"jsonl", "m2"}));
  c->add_option("--report-json", cor.report_json, "Write per-family counts as JSON");
  c->add_option("-j,--jobs", cor.jobs, "Worker threads (0 = all cores)")->capture_default_str();

  EvaluateOptions ev;
  auto* e = app.add_subcommand("evaluate", "Score hypotheses against gold pairs");
  e->add_option("-g,--gold", ev.gold, "Gold pairs (.jsonl or .m2)")->required();
  e->add_option("--hyp", ev.hyp, "Hypotheses: .jsonl records or one line per pair")->required();
  e->add_option("--hyp-field", ev.hyp_field, "JSON field holding the hypothesis text")->capture_default_str();
  e->add_option("--beta", ev.beta, "F-score beta")->capture_default_str();
  e->add_option("--json", ev.json, "Also write the report as JSON");
  e->add_option("--confusion-table", ev.table, "Confusion table used by the edit classifier");

  StatsOptions st;
  auto* s = app.add_subcommand("stats", "Sample length statistics per tokenizer");
  s->add_option("-i,--input", st.input, "Corpus")->required();
  s->add_option("--tokenizer", st.tokenizers, "chars, bytes, words or all (repeatable)")->delimiter(',');
  s->add_option("--max-chars", st.max_chars, "Split samples before counting (0 = no split)")
      ->capture_default_str();
  s->add_option("--json", st.json, "Also write the report as JSON");
  s->add_option("-j,--jobs", st.jobs, "Worker threads (0 = all cores)")->capture_default_str();

  CorrectOptions co;
  auto* r = app.add_subcommand("correct", "Correct texts with the rule pass and a unigram noisy channel");
  r->add_option("-i,--input", co.input, "Records with a source or text field")->required();
  r->add_option("-o,--output", co.output, "Corrections (.jsonl); stdout when omitted");
  r->add_option("--model", co.model, "Unigram model from build-model");
  r->add_flag("--rules-only", co.rules_only, "Apply only the cleaning rules");
  r->add_option("--keyboard", co.keyboard, "Keyboard weight file");
  r->add_option("--confusion-table", co.table, "Confusion table file");
  r->add_option("-j,--jobs", co.jobs, "Worker threads (0 = all cores)")->capture_default_str();

  DeriveOptions de;
  auto* d = app.add_subcommand("derive-stats", "Count confusion-group matches in a corpus");
  d->add_option("-i,--input", de.input, "Corpus")->required();
  d->add_option("-o,--output", de.output, "Write the table file");
  d->add_option("--pattern", de.patterns, "Regular expression (repeatable); defaults to the shipped groups");

  BuildModelOptions bm;
  auto* b = app.add_subcommand("build-model", "Build a unigram model for correct");
  b->add_option("-i,--input", bm.input, "Reference corpus")->required();
  b->add_option("-o,--output", bm.output, "Model file")->required();

  std::vector<std::string> argv_store;
  argv_store.push_back("litgec");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& ex) {
    if (ex.get_exit_code() == 0) return app.exit(ex, out, err);  // --help, --version
    err << "error[Usage]: " << ex.what() << '\n';
    return 2;
  }

  try {
    if (*p) return cmd_preprocess(pre, out, err);
    if (*c) return cmd_corrupt(cor, out);
    if (*e) return cmd_evaluate(ev, out);
    if (*s) return cmd_stats(st, out);
    if (*r) return cmd_correct(co, out);
    if (*d) return cmd_derive_stats(de, out);
    if (*b) return cmd_build_model(bm, out);
  } catch (const Error& ex) {
    err << "error[" << to_string(ex.code()) << "]: " << ex.what() << '\n';
    return 1;
  } catch (const std::exception& ex) {
    err << "error[Internal]: " << ex.what() << '\n';
    return 1;
  }
  return 0;
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace litgec::cli
