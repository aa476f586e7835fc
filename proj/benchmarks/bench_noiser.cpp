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

#include <benchmark/benchmark.h>

#include <string>

#include "litgec/evaluator.hpp"
#include "litgec/noiser.hpp"

namespace {

const std::string kParagraph =
    "Vakar vakare, kai jau temo, mes ėjome namo pro senąjį parką. „Ar girdi?“ – paklausė Ona. "
    "1918 m. vasario 16 d. Lietuvos Taryba pasirašė nepriklausomybės aktą, o A. Sabonis tapo legenda. ";

void BM_Corrupt(benchmark::State& state) {
  const auto& table = litgec::ConfusionTable::lithuanian_default();
  const auto kbd = litgec::KeyboardModel::qwerty();
  litgec::CorruptionConfig cfg;
  std::string text;
  for (int k = 0; k < state.range(0); ++k) text += kParagraph;
  std::size_t id = 0;
  for (auto _ : state) {
    const auto pair = litgec::corrupt({std::to_string(id++), text}, cfg, table, kbd);
    benchmark::DoNotOptimize(pair.gold_edits.size());
  }
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_Corrupt)->Arg(1)->Arg(8)->Arg(32);

void BM_ScorePair(benchmark::State& state) {
  const auto& table = litgec::ConfusionTable::lithuanian_default();
  const auto kbd = litgec::KeyboardModel::qwerty();
  litgec::CorruptionConfig cfg;
  const auto pair = litgec::corrupt({"x", kParagraph + kParagraph}, cfg, table, kbd);
  for (auto _ : state) benchmark::DoNotOptimize(litgec::score_pair(pair, pair.target, 0.5).total.tp);
}
BENCHMARK(BM_ScorePair);

}  // namespace
