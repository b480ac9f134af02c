// include/swatk/ngram.h

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

#ifndef SWATK_NGRAM_H_
#define SWATK_NGRAM_H_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "swatk/error.h"

namespace swatk {

// Sentence boundary markers used in counting and in ARPA output.
inline const char *kSentStart = "<s>";
inline const char *kSentEnd = "</s>";

// k-grams are stored space joined, so tokens must not contain whitespace.
// tables[k-1] holds the k-gram table.
struct NgramCounts {
  int order = 0;
  std::vector<std::map<std::string, long long>> tables;
  std::set<std::string> vocabulary;
};

struct NgramEntry {
  double logprob = 0.0;  // log10
  std::optional<double> backoff;  // log10, only on context-bearing k-grams
};

enum class Smoothing { kWittenBell, kMle };

struct NgramModel {
  int order = 0;
  std::vector<std::map<std::string, NgramEntry>> tables;
  std::set<std::string> vocabulary;
  // Witten-Bell models route unseen events through backoff; a pure MLE
  // model leaves them unassigned and perplexity goes to +infinity.
  bool has_backoff = false;

  // log10 p(word | context), context being the up-to-(order-1) preceding
  // tokens. Applies backoff recursively. Throws UnknownToken if `word` is
  // outside the vocabulary.
  double LogProb(const std::vector<std::string> &context,
                 const std::string &word) const;
};

class EmptyCounts : public Error {
 public:
  EmptyCounts() : Error("cannot estimate a model from empty counts") {}
};

class UnknownToken : public Error {
 public:
  explicit UnknownToken(const std::string &token)
      : Error("token \"" + token + "\" is outside the model vocabulary"),
        token(token) {}
  std::string token;
};

class ArpaError : public Error {
 public:
  using Error::Error;
};

class MalformedHeader : public ArpaError {
 public:
  using ArpaError::ArpaError;
};

class SectionCountMismatch : public ArpaError {
 public:
  SectionCountMismatch(int order, std::size_t expected, std::size_t found)
      : ArpaError("ngram " + std::to_string(order) + " section: header says " +
                  std::to_string(expected) + " entries, found " +
                  std::to_string(found)),
        order(order) {}
  int order;
};

class MalformedEntry : public ArpaError {
 public:
  explicit MalformedEntry(std::size_t line)
      : ArpaError("malformed ARPA entry on line " + std::to_string(line)),
        line(line) {}
  std::size_t line;
};

// Pads each sentence with order-1 leading <s> and one trailing </s>, then
// counts every k-gram for k <= order.
NgramCounts CountNgrams(const std::vector<std::vector<std::string>> &sentences,
                        int order);

// Witten-Bell or MLE estimation. Throws EmptyCounts.
NgramModel Estimate(const NgramCounts &counts, Smoothing smoothing);

// Standard ARPA layout, 6-decimal fixed-point log10 values, LF endings.
std::string EmitArpa(const NgramModel &model);

// Inverse of EmitArpa; tolerates CRLF and extra whitespace. Throws
// ArpaError on malformed headers, count mismatches or bad entries.
NgramModel ParseArpa(const std::string &text);

// 10^(-(sum log10 p) / N) over all scored tokens including </s>.
// Returns +infinity for an unseen event in a backoff-free (MLE) model.
double Perplexity(const NgramModel &model,
                  const std::vector<std::vector<std::string>> &sentences);

}  // namespace swatk

#endif  // SWATK_NGRAM_H_
