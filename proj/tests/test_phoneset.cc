// tests/test_phoneset.cc

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

#include "doctest.h"
#include "swatk/phoneset.h"

#include <set>
#include <string>

using namespace swatk;

TEST_CASE("scheme names round-trip") {
  for (Scheme s : {Scheme::kBasic34, Scheme::kAlffa36, Scheme::kAugmented40}) {
    Scheme back;
    REQUIRE(SchemeFromName(SchemeName(s), &back));
    CHECK(back == s);
  }
  Scheme out;
  CHECK_FALSE(SchemeFromName("cmudict", &out));
  CHECK_FALSE(SchemeFromName("", &out));
}

TEST_CASE("scheme sizes") {
  CHECK(SchemeSize(Scheme::kBasic34) == 34);
  CHECK(SchemeSize(Scheme::kAlffa36) == 36);
  CHECK(SchemeSize(Scheme::kAugmented40) == 40);
}

TEST_CASE("inventories are well formed") {
  for (Scheme s : {Scheme::kBasic34, Scheme::kAlffa36, Scheme::kAugmented40}) {
    const PhoneInventory &inv = Inventory(s);
    CHECK(ValidateInventory(inv).empty());
    CHECK(inv.entries.size() == SchemeSize(s));
    CHECK(inv.silence_phone == "SIL");
    // phones and graphemes unique, checked independently of the validator
    std::set<std::string> phones, graphemes;
    for (const GraphemePhone &gp : inv.entries) {
      CHECK(phones.insert(gp.phone).second);
      CHECK(graphemes.insert(gp.grapheme).second);
      CHECK(gp.grapheme.size() >= 1);
      CHECK(gp.grapheme.size() <= 3);
    }
  }
}

TEST_CASE("basic34 phones are the graphemes themselves") {
  const PhoneInventory &inv = Inventory(Scheme::kBasic34);
  for (const GraphemePhone &gp : inv.entries) CHECK(gp.phone == gp.grapheme);
  REQUIRE(inv.PhoneOf("nd") != nullptr);
  CHECK(*inv.PhoneOf("nd") == "nd");
  CHECK(inv.PhoneOf("c") == nullptr);
  CHECK(inv.PhoneOf("q") == nullptr);
  CHECK(inv.PhoneOf("x") == nullptr);
}

TEST_CASE("alffa36 digraphs double the uppercase letter") {
  const PhoneInventory &inv = Inventory(Scheme::kAlffa36);
  struct { const char *g, *p; } rows[] = {
      {"mb", "BB"}, {"ch", "CC"}, {"nd", "DD"}, {"ng", "GG"}, {"nj", "JJ"},
      {"dh", "LL"}, {"ng'", "NN"}, {"gh", "RR"}, {"sh", "SS"}, {"th", "TT"},
      {"mv", "VV"}, {"kh", "XX"}, {"nz", "ZZ"},
  };
  for (const auto &row : rows) {
    REQUIRE(inv.PhoneOf(row.g) != nullptr);
    CHECK(*inv.PhoneOf(row.g) == row.p);
  }
  // single letters map to themselves; c, q, x are not in this scheme
  REQUIRE(inv.PhoneOf("a") != nullptr);
  CHECK(*inv.PhoneOf("a") == "a");
  CHECK(inv.PhoneOf("c") == nullptr);
  CHECK(inv.PhoneOf("q") == nullptr);
  CHECK(inv.PhoneOf("x") == nullptr);
  // the "ngg" spelling of ng' is an alias, not an inventory entry
  REQUIRE(inv.PhoneOf("ngg") != nullptr);
  CHECK(*inv.PhoneOf("ngg") == "NN");
  CHECK(inv.GraphemeOf("NN") != nullptr);
  CHECK(*inv.GraphemeOf("NN") == "ng'");
}

TEST_CASE("augmented40 vowels come in short/long pairs") {
  const PhoneInventory &inv = Inventory(Scheme::kAugmented40);
  struct { const char *g, *p; } rows[] = {
      {"a", "AH"}, {"aa", "AA"}, {"e", "EH"}, {"ee", "EE"}, {"i", "IH"},
      {"ii", "II"}, {"o", "OH"}, {"oo", "OO"}, {"u", "UH"}, {"uu", "UU"},
      {"h", "HH"}, {"j", "JH"}, {"ng'", "NG'"}, {"mb", "MB"}, {"ch", "CH"},
  };
  for (const auto &row : rows) {
    REQUIRE(inv.PhoneOf(row.g) != nullptr);
    CHECK(*inv.PhoneOf(row.g) == row.p);
  }
  CHECK(inv.MaxGraphemeLength() == 3);
}

TEST_CASE("GraphemeOf inverts the entry table") {
  for (Scheme s : {Scheme::kBasic34, Scheme::kAlffa36, Scheme::kAugmented40}) {
    const PhoneInventory &inv = Inventory(s);
    for (const GraphemePhone &gp : inv.entries) {
      REQUIRE(inv.GraphemeOf(gp.phone) != nullptr);
      CHECK(*inv.GraphemeOf(gp.phone) == gp.grapheme);
      CHECK(inv.HasPhone(gp.phone));
    }
    CHECK_FALSE(inv.HasPhone("QQQ"));
    CHECK(inv.GraphemeOf("QQQ") == nullptr);
  }
}

TEST_CASE("validator flags constructed defects") {
  PhoneInventory inv = Inventory(Scheme::kBasic34);
  inv.entries.push_back({"zz", "zz"});  // wrong size now
  CHECK_FALSE(ValidateInventory(inv).empty());

  PhoneInventory dup = Inventory(Scheme::kAugmented40);
  dup.entries[1].phone = dup.entries[0].phone;  // duplicate phone
  CHECK_FALSE(ValidateInventory(dup).empty());
}
