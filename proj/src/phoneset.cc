// src/phoneset.cc

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

#include "swatk/phoneset.h"

#include <algorithm>
#include <set>
#include <sstream>

namespace swatk {

const char *SchemeName(Scheme s) {
  switch (s) {
    case Scheme::kBasic34: return "basic";
    case Scheme::kAlffa36: return "alffa";
    case Scheme::kAugmented40: return "augmented";
  }
  return "?";
}

bool SchemeFromName(std::string_view name, Scheme *out) {
  if (name == "basic") { *out = Scheme::kBasic34; return true; }
  if (name == "alffa") { *out = Scheme::kAlffa36; return true; }
  if (name == "augmented") { *out = Scheme::kAugmented40; return true; }
  return false;
}

std::size_t SchemeSize(Scheme s) {
  switch (s) {
    case Scheme::kBasic34: return 34;
    case Scheme::kAlffa36: return 36;
    case Scheme::kAugmented40: return 40;
  }
  return 0;
}

namespace {

// 29 consonants plus the 5 vowels; phones are the graphemes themselves.
PhoneInventory MakeBasic34() {
  static const char *kGraphemes[] = {
      "a", "b",  "ch", "d",  "dh", "e",  "f",   "g",  "gh", "h", "i", "j",
      "k", "l",  "m",  "mb", "n",  "nd", "ng",  "ng'", "nj", "ny", "o", "p",
      "r", "s",  "sh", "t",  "th", "u",  "v",   "w",  "y",  "z"};
  PhoneInventory inv;
  inv.scheme = Scheme::kBasic34;
  for (const char *g : kGraphemes) inv.entries.push_back({g, g});
  return inv;
}

// 23 single letters map to themselves; the 13 digraphs take doubled
// uppercase symbols. "ngg" is the orthographic spelling of ng' seen in
// ALFFA-style text and is accepted as an alias during segmentation.
PhoneInventory MakeAlffa36() {
  static const char *kSingles = "abdefghijklmnoprstuvwyz";
  struct { const char *g, *p; } static const kDigraphs[] = {
      {"mb", "BB"}, {"ch", "CC"}, {"nd", "DD"}, {"ng", "GG"}, {"nj", "JJ"},
      {"dh", "LL"}, {"ng'", "NN"}, {"gh", "RR"}, {"sh", "SS"}, {"th", "TT"},
      {"mv", "VV"}, {"kh", "XX"}, {"nz", "ZZ"}};
  PhoneInventory inv;
  inv.scheme = Scheme::kAlffa36;
  for (const char *c = kSingles; *c; ++c) {
    std::string g(1, *c);
    inv.entries.push_back({g, g});
  }
  for (const auto &d : kDigraphs) inv.entries.push_back({d.g, d.p});
  inv.aliases.push_back({"ngg", "NN"});
  return inv;
}

// 10 vowels (short/long pairs) plus 30 consonants.
PhoneInventory MakeAugmented40() {
  struct { const char *g, *p; } static const kEntries[] = {
      {"a", "AH"},  {"aa", "AA"}, {"b", "B"},    {"ch", "CH"}, {"d", "D"},
      {"dh", "DH"}, {"e", "EH"},  {"ee", "EE"},  {"f", "F"},   {"g", "G"},
      {"gh", "GH"}, {"h", "HH"},  {"i", "IH"},   {"ii", "II"}, {"j", "JH"},
      {"k", "K"},   {"kh", "KH"}, {"l", "L"},    {"m", "M"},   {"mb", "MB"},
      {"n", "N"},   {"nd", "ND"}, {"ng", "NG"},  {"ng'", "NG'"}, {"nj", "NJ"},
      {"ny", "NY"}, {"o", "OH"},  {"oo", "OO"},  {"p", "P"},   {"r", "R"},
      {"s", "S"},   {"sh", "SH"}, {"t", "T"},    {"th", "TH"}, {"u", "UH"},
      {"uu", "UU"}, {"v", "V"},   {"w", "W"},    {"y", "Y"},   {"z", "Z"}};
  PhoneInventory inv;
  inv.scheme = Scheme::kAugmented40;
  for (const auto &e : kEntries) inv.entries.push_back({e.g, e.p});
  return inv;
}

}  // namespace

const PhoneInventory &Inventory(Scheme s) {
  static const PhoneInventory basic = MakeBasic34();
  static const PhoneInventory alffa = MakeAlffa36();
  static const PhoneInventory augmented = MakeAugmented40();
  switch (s) {
    case Scheme::kBasic34: return basic;
    case Scheme::kAlffa36: return alffa;
    case Scheme::kAugmented40: return augmented;
  }
  return augmented;
}

const std::string *PhoneInventory::PhoneOf(std::string_view grapheme) const {
  for (const auto &e : entries)
    if (e.grapheme == grapheme) return &e.phone;
  for (const auto &a : aliases)
    if (a.grapheme == grapheme) return &a.phone;
  return nullptr;
}

const std::string *PhoneInventory::GraphemeOf(std::string_view phone) const {
  for (const auto &e : entries)
    if (e.phone == phone) return &e.grapheme;
  return nullptr;
}

bool PhoneInventory::HasPhone(std::string_view phone) const {
  return GraphemeOf(phone) != nullptr;
}

std::size_t PhoneInventory::MaxGraphemeLength() const {
  std::size_t n = 0;
  for (const auto &e : entries) n = std::max(n, e.grapheme.size());
  for (const auto &a : aliases) n = std::max(n, a.grapheme.size());
  return n;
}

std::vector<std::string> ValidateInventory(const PhoneInventory &inv) {
  std::vector<std::string> issues;
  std::set<std::string> graphemes, phones;
  for (const auto &e : inv.entries) {
    if (!graphemes.insert(e.grapheme).second)
      issues.push_back("duplicate grapheme: " + e.grapheme);
    if (!phones.insert(e.phone).second)
      issues.push_back("duplicate phone (non-injective map): " + e.phone);
    if (e.grapheme.empty()) {
      issues.push_back("empty grapheme");
      continue;
    }
    if (e.grapheme.size() > 3)
      issues.push_back("grapheme too long: " + e.grapheme);
    for (char c : e.grapheme)
      if (!((c >= 'a' && c <= 'z') || c == '\''))
        issues.push_back("illegal character in grapheme: " + e.grapheme);
  }
  if (inv.entries.size() != SchemeSize(inv.scheme)) {
    std::ostringstream os;
    os << "size mismatch: scheme " << SchemeName(inv.scheme) << " expects "
       << SchemeSize(inv.scheme) << " entries, found " << inv.entries.size();
    issues.push_back(os.str());
  }
  return issues;
}

}  // namespace swatk
