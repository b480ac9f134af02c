// src/lexicon.cc

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

#include "swatk/lexicon.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "swatk/g2p.h"

namespace swatk {

LexiconBuildResult BuildLexicon(const std::vector<std::string> &words,
                                Scheme scheme) {
  LexiconBuildResult result;
  result.lexicon.scheme = scheme;
  std::set<std::string> seen, rejected;
  for (const std::string &raw : words) {
    std::string word;
    try {
      word = NormalizeWord(raw);
    } catch (const EmptyAfterNormalization &) {
      continue;  // non-lexical token
    }
    if (seen.count(word) || rejected.count(word)) continue;
    try {
      result.lexicon.entries.push_back({word, Phonemize(word, scheme)});
      seen.insert(word);
    } catch (const UnknownGrapheme &e) {
      result.rejects.push_back({word, e.position});
      rejected.insert(word);
    }
  }
  std::sort(result.lexicon.entries.begin(), result.lexicon.entries.end(),
            [](const LexiconEntry &a, const LexiconEntry &b) {
              return a.word < b.word;
            });
  return result;
}

std::string EmitDictionary(const Lexicon &lex) {
  std::string out;
  for (const LexiconEntry &e : lex.entries) {
    out += e.word;
    for (const std::string &p : e.phones) {
      out += ' ';
      out += p;
    }
    out += '\n';
  }
  return out;
}

std::string EmitFillerDictionary() {
  return "<s> SIL\n</s> SIL\n<sil> SIL\n";
}

std::string EmitPhoneList(const Lexicon &lex) {
  std::set<std::string> phones;
  phones.insert("SIL");  // a silence phone is always required downstream
  for (const LexiconEntry &e : lex.entries)
    phones.insert(e.phones.begin(), e.phones.end());
  std::string out;
  for (const std::string &p : phones) {
    out += p;
    out += '\n';
  }
  return out;
}

Lexicon ParseDictionary(const std::string &text, Scheme scheme,
                        bool allow_sil) {
  const PhoneInventory &inv = Inventory(scheme);
  Lexicon lex;
  lex.scheme = scheme;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string word;
    if (!(fields >> word)) throw MalformedLine(lineno);
    LexiconEntry entry;
    entry.word = word;
    std::string phone;
    while (fields >> phone) {
      if (!inv.HasPhone(phone) && !(allow_sil && phone == inv.silence_phone))
        throw UnknownDictPhone(lineno, phone);
      entry.phones.push_back(phone);
    }
    if (entry.phones.empty()) throw MalformedLine(lineno);
    lex.entries.push_back(std::move(entry));
  }
  return lex;
}

}  // namespace swatk
