// include/swatk/phoneset.h

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

#ifndef SWATK_PHONESET_H_
#define SWATK_PHONESET_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace swatk {

// The three Kiswahili phone schemes. basic-34 writes phones as the graphemes
// themselves; alffa-36 uses doubled uppercase symbols for the digraphs;
// augmented-40 uses CMU-style uppercase symbols with long/short vowel pairs.
enum class Scheme { kBasic34, kAlffa36, kAugmented40 };

// "basic" | "alffa" | "augmented"
const char *SchemeName(Scheme s);
bool SchemeFromName(std::string_view name, Scheme *out);
std::size_t SchemeSize(Scheme s);  // 34, 36, 40

struct GraphemePhone {
  std::string grapheme;  // lowercase, possibly a digraph, at most 3 chars
  std::string phone;
};

// Closed grapheme<->phone table for one scheme. Immutable after
// construction; safe to share across threads.
struct PhoneInventory {
  Scheme scheme;
  std::vector<GraphemePhone> entries;
  // Orthographic variants recognized during segmentation but not part of the
  // closed inventory (the "ngg" spelling of ng' seen in ALFFA-style text).
  std::vector<GraphemePhone> aliases;
  std::string silence_phone = "SIL";

  // Lookup over entries then aliases; nullptr if absent.
  const std::string *PhoneOf(std::string_view grapheme) const;
  // Canonical inverse over entries only; nullptr if absent.
  const std::string *GraphemeOf(std::string_view phone) const;
  bool HasPhone(std::string_view phone) const;
  std::size_t MaxGraphemeLength() const;
};

// Fixed compiled-in inventory for a scheme.
const PhoneInventory &Inventory(Scheme s);

// Checks uniqueness of phones and graphemes, size vs. the scheme, grapheme
// alphabet and length. Empty result means the inventory is well formed.
std::vector<std::string> ValidateInventory(const PhoneInventory &inv);

}  // namespace swatk

#endif  // SWATK_PHONESET_H_
