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

#include <random>
#include <string>

#include "litgec/align.hpp"

namespace {

std::u32string random_text(std::mt19937_64& gen, std::size_t n) {
  static const std::u32string alphabet = U"aąbcčdeėęfghiįyjklmnoprsštuųūvzž ,.";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::u32string s(n, U' ');
  for (auto& c : s) c = alphabet[pick(gen)];
  return s;
}

// Near-identical inputs: the common case when scoring corrections.
void BM_AlignSimilar(benchmark::State& state) {
  std::mt19937_64 gen(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_text(gen, n);
  auto b = a;
  for (std::size_t k = 0; k < n / 50 + 1; ++k) b[(k * 37) % n] = U'x';
  for (auto _ : state) benchmark::DoNotOptimize(litgec::align(a, b).cost);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_AlignSimilar)->RangeMultiplier(4)->Range(64, 4096);

void BM_AlignUnrelated(benchmark::State& state) {
  std::mt19937_64 gen(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_text(gen, n);
  const auto b = random_text(gen, n);
  for (auto _ : state) benchmark::DoNotOptimize(litgec::align(a, b).cost);
}
BENCHMARK(BM_AlignUnrelated)->RangeMultiplier(4)->Range(64, 1024);

}  // namespace
