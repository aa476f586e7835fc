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

// Shared test data: the three example rows used for corruption checks and a seeded
// generator of Lithuanian-looking prose.

#include <cstdint>
#include <string>
#include <vector>

#include "litgec/corpus.hpp"

namespace litgec::testing {

/// The original (clean) example rows, joined into
/// single paragraphs.
const std::vector<std::string>& original_rows();

/// Sentences built from a fixed Lithuanian vocabulary with capitals, commas,
/// „quotes“, numbers and dashes. Every sample has between `min_sentences`
/// and `max_sentences` sentences; ids are "s<k>".
std::vector<TextSample> synthetic_corpus(std::size_t samples, std::uint64_t seed, std::size_t min_sentences = 1,
                                         std::size_t max_sentences = 4);

/// Random UTF-8 text over a mixed alphabet that exercises the cleaners:
/// quotes of every style, spaces, punctuation, digits, "m." and initials.
std::string messy_text(std::uint64_t seed, std::size_t length);

}  // namespace litgec::testing
