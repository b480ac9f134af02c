// include/swatk/lexicon.h

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

#ifndef SWATK_LEXICON_H_
#define SWATK_LEXICON_H_

#include <cstddef>
#include <string>
#include <vector>

#include "swatk/error.h"
#include "swatk/phoneset.h"

namespace swatk {

struct LexiconEntry {
  std::string word;                 // normalized
  std::vector<std::string> phones;  // one pronunciation per word
  bool operator==(const LexiconEntry &) const = default;
};

// Deduplicated pronunciation dictionary, sorted ascending by word
// (plain codepoint order, so emission is byte deterministic).
struct Lexicon {
  Scheme scheme;
  std::vector<LexiconEntry> entries;
  bool operator==(const Lexicon &) const = default;
};

// A word that could not be phonemized, with the failing byte position.
struct RejectedWord {
  std::string word;
  std::size_t position;
};

struct LexiconBuildResult {
  Lexicon lexicon;
  std::vector<RejectedWord> rejects;
};

class MalformedLine : public Error {
 public:
  explicit MalformedLine(std::size_t line)
      : Error("malformed dictionary line " + std::to_string(line)),
        line(line) {}
  std::size_t line;
};

class UnknownDictPhone : public Error {
 public:
  UnknownDictPhone(std::size_t line, const std::string &phone)
      : Error("unknown phone \"" + phone + "\" on dictionary line " +
              std::to_string(line)),
        line(line), phone(phone) {}
  std::size_t line;
  std::string phone;
};

// Normalizes, phonemizes, deduplicates and sorts. Tokens that normalize to
// nothing are dropped; words with unknown graphemes land in `rejects`.
LexiconBuildResult BuildLexicon(const std::vector<std::string> &words,
                                Scheme scheme);

// "<word> <phones...>\n" per entry, sorted word order, LF endings.
std::string EmitDictionary(const Lexicon &lex);

// The fixed filler dictionary: <s>, </s> and <sil>, all mapping to SIL.
std::string EmitFillerDictionary();

// Every phone used by an entry plus SIL, sorted, unique, one per line.
std::string EmitPhoneList(const Lexicon &lex);

// Inverse of EmitDictionary. With `allow_sil`, SIL is accepted as a phone
// (so the filler dictionary parses too). Throws MalformedLine or
// UnknownDictPhone.
Lexicon ParseDictionary(const std::string &text, Scheme scheme,
                        bool allow_sil = false);

}  // namespace swatk

#endif  // SWATK_LEXICON_H_
