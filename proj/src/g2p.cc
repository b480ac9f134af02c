// src/g2p.cc

// Copyright 2026  swatk authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "swatk/g2p.h"

#include <algorithm>
#include <cctype>

namespace swatk {

std::string FoldApostrophes(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size();) {
    if (i + 2 < raw.size() && static_cast<unsigned char>(raw[i]) == 0xE2 &&
        static_cast<unsigned char>(raw[i + 1]) == 0x80 &&
        (static_cast<unsigned char>(raw[i + 2]) == 0x98 ||
         static_cast<unsigned char>(raw[i + 2]) == 0x99)) {
      out += '\'';
      i += 3;
    } else if (i + 1 < raw.size() &&
               static_cast<unsigned char>(raw[i]) == 0xCA &&
               static_cast<unsigned char>(raw[i + 1]) == 0xBC) {
      out += '\'';
      i += 2;
    } else {
      out += raw[i];
      ++i;
    }
  }
  return out;
}

std::string NormalizeWord(std::string_view raw) {
  std::string folded = FoldApostrophes(raw);
  std::string out;
  out.reserve(folded.size());
  for (char c : folded) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if (c >= 'a' && c <= 'z') {
      out += c;
    } else if (c == '\'') {
      // Apostrophe survives only in the ng' context.
      if (out.size() >= 2 && out.compare(out.size() - 2, 2, "ng") == 0)
        out += c;
    }
  }
  if (out.empty()) throw EmptyAfterNormalization();
  return out;
}

std::vector<std::string> SegmentGraphemes(const std::string &word,
                                          Scheme scheme) {
  const PhoneInventory &inv = Inventory(scheme);
  const std::size_t max_len = inv.MaxGraphemeLength();
  std::vector<std::string> segments;
  std::size_t i = 0;
  while (i < word.size()) {
    std::size_t len = std::min(max_len, word.size() - i);
    for (; len > 0; --len) {
      if (inv.PhoneOf(std::string_view(word).substr(i, len))) break;
    }
    if (len == 0) throw UnknownGrapheme(word, i);
    segments.push_back(word.substr(i, len));
    i += len;
  }
  return segments;
}

std::vector<std::string> Phonemize(const std::string &word, Scheme scheme) {
  const PhoneInventory &inv = Inventory(scheme);
  std::vector<std::string> phones;
  for (const std::string &g : SegmentGraphemes(word, scheme))
    phones.push_back(*inv.PhoneOf(g));
  return phones;
}

std::string Detokenize(const std::vector<std::string> &phones, Scheme scheme) {
  const PhoneInventory &inv = Inventory(scheme);
  std::string word;
  for (const std::string &p : phones) {
    const std::string *g = inv.GraphemeOf(p);
    if (g == nullptr) throw UnknownPhone(p);
    word += *g;
  }
  return word;
}

}  // namespace swatk
