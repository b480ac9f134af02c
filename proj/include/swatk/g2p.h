// include/swatk/g2p.h

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

#ifndef SWATK_G2P_H_
#define SWATK_G2P_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "swatk/error.h"
#include "swatk/phoneset.h"

namespace swatk {

// Raised by NormalizeWord when nothing survives cleaning (a pure-punctuation
// token, say).
class EmptyAfterNormalization : public Error {
 public:
  EmptyAfterNormalization()
      : Error("word is empty after normalization") {}
};

// No inventory grapheme matches at `position` (byte offset into the word).
class UnknownGrapheme : public Error {
 public:
  UnknownGrapheme(const std::string &word, std::size_t position)
      : Error("no grapheme of the scheme matches in \"" + word +
              "\" at position " + std::to_string(position)),
        position(position) {}
  std::size_t position;
};

class UnknownPhone : public Error {
 public:
  explicit UnknownPhone(const std::string &phone)
      : Error("phone \"" + phone + "\" is not in the scheme inventory"),
        phone(phone) {}
  std::string phone;
};

// Replaces the typographic apostrophes U+2018, U+2019 and U+02BC with the
// plain ASCII apostrophe. Other bytes pass through untouched.
std::string FoldApostrophes(std::string_view raw);

// Lowercases, folds typographic apostrophes (U+2018/U+2019/U+02BC) to ',
// strips everything outside [a-z'], and keeps an apostrophe only directly
// after "ng". Throws EmptyAfterNormalization if nothing remains.
std::string NormalizeWord(std::string_view raw);

// Left-to-right greedy longest match against the scheme's graphemes (length
// 3, then 2, then 1). The concatenation of the result equals `word`.
// Throws UnknownGrapheme on an unmatchable position.
std::vector<std::string> SegmentGraphemes(const std::string &word,
                                          Scheme scheme);

// Segments and maps each grapheme through the inventory.
std::vector<std::string> Phonemize(const std::string &word, Scheme scheme);

// Exact inverse of Phonemize over canonical graphemes:
// Detokenize(Phonemize(w, s), s) == w.
std::string Detokenize(const std::vector<std::string> &phones, Scheme scheme);

}  // namespace swatk

#endif  // SWATK_G2P_H_
