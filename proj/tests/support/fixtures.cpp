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

#include "fixtures.hpp"

#include <array>
#include <random>

#include "litgec/text.hpp"

namespace litgec::testing {

const std::vector<std::string>& original_rows() {
  static const std::vector<std::string> rows = {
      "„Mes nenorime, kad jie keiktųsi, pyktųsi. Neleidžiame ne tik gerti, bet ir rūkyti. Taisyklės čia griežtos, "
      "rūkei, atleisime tau kartą, nepaklusai, eik iš kur atėjęs. Jei jau žmogus nusprendė keisti gyvenimą, tai "
      "turi būti daroma rimtai“, - nuolaidų nežada M. Balčiūnas.",
      "Šeštadienio vakarą Klaipėdoje surengto „Eurovizijos“ atrankos finalo dalyviai po renginio miegoti nėjo – "
      "dešimt savaičių trukusios kovos pabaigą atšventė uostamiesčio kokteilių bare „Oscar“.",
      "300 kg hašišo gabenimo į Lietuvą byla: vienas išteisintas, kitam sušvelninta bausmė",
  };
  return rows;
}

namespace {

constexpr const char* kWords[] = {
    "mes", "nenorime", "kad", "jie", "keiktųsi", "pyktųsi", "neleidžiame", "ne", "tik", "gerti", "bet", "ir",
    "rūkyti", "taisyklės", "čia", "griežtos", "atleisime", "tau", "kartą", "nepaklusai", "eik", "iš", "kur",
    "atėjęs", "jei", "jau", "žmogus", "nusprendė", "keisti", "gyvenimą", "tai", "turi", "būti", "daroma", "rimtai",
    "nuolaidų", "nežada", "šeštadienio", "vakarą", "surengto", "atrankos", "finalo", "dalyviai", "po", "renginio",
    "miegoti", "nėjo", "dešimt", "savaičių", "trukusios", "kovos", "pabaigą", "atšventė", "uostamiesčio",
    "kokteilių", "bare", "hašišo", "gabenimo", "į", "byla", "vienas", "išteisintas", "kitam", "sušvelninta",
    "bausmė", "pusseserė", "užsimerkė", "dirbti", "lipdavo", "atgal", "iššūkis", "graži", "šalis", "mokykla",
    "vaikai", "žaidžia", "kieme", "rytoj", "lis", "lietus", "miestas", "upė", "tekėjo", "greitai", "senelis",
    "pasakojo", "istoriją", "apie", "karą", "knyga", "gulėjo", "ant", "stalo", "mergaitė", "dainavo", "dainą",
    "valdžia", "priėmė", "sprendimą", "dėl", "mokesčių", "ūkininkai", "sėja", "grūdus", "ruduo", "atėjo", "anksti",
    "medžiai", "numetė", "lapus", "draugai", "susitiko", "kavinėje", "prie", "ežero", "šuo", "lojo", "naktį",
    "policija", "ieško", "vagies", "automobilis", "sustojo", "sankryžoje", "gydytojas", "patarė", "daugiau",
    "vaikščioti", "studentai", "laikė", "egzaminą", "universitete", "sportininkas", "laimėjo", "medalį",
    "varžybose", "ministras", "pareiškė", "kad", "biudžetas", "didės", "vasarą", "keliausime", "prie", "jūros",
    "gražiausias", "metų", "laikas", "yra", "pavasaris", "svarbu", "suprasti", "kodėl", "tai", "vyksta",
    "bendruomenė", "rinkosi", "aikštėje", "užsienio", "svečiai", "atvyko", "žiemą", "sninga", "dažnai",
};

constexpr std::array<const char*, 14> kNames = {"Lietuva", "Vilnius",      "Kaunas",     "Klaipėdoje", "Eurovizijos",
                                                "Balčiūnas", "Oscar",        "Nemunas",    "Europos",    "Seimas",
                                                "Jonas",   "M. Balčiūnas", "A. Sabonis", "Ona"};

std::string capitalize(std::string w) {
  auto u = utf8_decode(w);
  if (!u.empty()) u[0] = chars::to_upper(u[0]);
  return utf8_encode(u);
}

}  // namespace

std::vector<TextSample> synthetic_corpus(std::size_t samples, std::uint64_t seed, std::size_t min_sentences,
                                         std::size_t max_sentences) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  std::vector<TextSample> out;
  out.reserve(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    std::string text;
    const std::size_t sentences = min_sentences + pick(max_sentences - min_sentences + 1);
    for (std::size_t s = 0; s < sentences; ++s) {
      if (!text.empty()) text += ' ';
      const std::size_t words = 4 + pick(10);
      for (std::size_t w = 0; w < words; ++w) {
        std::string word;
        const auto roll = pick(100);
        if (roll < 6) {
          word = kNames[pick(kNames.size())];
        } else if (roll < 8) {
          word = std::to_string(1 + pick(2025));
          if (w + 1 < words) word += pick(2) ? " m." : " d.";
        } else if (roll < 9 && w > 0 && w + 1 < words) {
          word = "ir t. t.";
        } else if (roll < 11) {
          word = "„" + capitalize(kWords[pick(std::size(kWords))]) + "“";
        } else {
          word = kWords[pick(std::size(kWords))];
        }
        if (w == 0) word = capitalize(word);
        if (w > 0) text += ' ';
        text += word;
        if (w + 1 < words && pick(100) < 10) text += ',';
        if (w + 1 < words && pick(100) < 2) text += " –";
      }
      const auto end = pick(100);
      text += end < 85 ? "." : end < 93 ? "?" : "!";
    }
    out.push_back({"s" + std::to_string(k), std::move(text), std::nullopt});
  }
  return out;
}

std::string messy_text(std::uint64_t seed, std::size_t length) {
  static const std::vector<std::u32string> kPieces = {
      U"a",  U"b",  U"ž",  U"Š",  U"A",  U"T",  U"t",  U"d",  U"m",  U"1",   U"9",  U" ",  U" ",  U"  ", U"\t",
      U".",  U",",  U";",  U":",  U"!",  U"?",  U")",  U"]",  U"(",  U"\"",  U"“",  U"”",  U"„",  U"''", U"``",
      U"‘‘", U"’’", U",,", U"'",  U"`",  U"m.", U"d.", U"t.", U"A.", U"19m.", U" ,", U" .", U"–",  U"-",  U"\n",
  };
  std::mt19937_64 rng(seed);
  std::u32string out;
  while (out.size() < length) out += kPieces[rng() % kPieces.size()];
  return utf8_encode(out);
}

}  // namespace litgec::testing
