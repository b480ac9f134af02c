// include/swatk/scorer.h

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

#ifndef SWATK_SCORER_H_
#define SWATK_SCORER_H_

#include <cstddef>
#include <string>
#include <vector>

#include "swatk/error.h"

namespace swatk {

enum class EditOp { kMatch, kSubstitute, kDelete, kInsert };

struct AlignStep {
  EditOp op;
  std::string ref;  // empty for Insert
  std::string hyp;  // empty for Delete
};

// Minimum edit distance alignment at word level, unit costs.
struct Alignment {
  std::vector<AlignStep> ops;
  int substitutions = 0;
  int deletions = 0;
  int insertions = 0;
  int matches = 0;
  int Distance() const { return substitutions + deletions + insertions; }
};

struct UttScore {
  std::string utt_id;
  int substitutions = 0;
  int deletions = 0;
  int insertions = 0;
  int ref_words = 0;
  double wer = 0.0;  // percent; +inf for errors against an empty reference
};

// Corpus WER is pooled: 100 * (S+D+I) / N over the whole corpus, not the
// mean of per-utterance rates.
struct ScoreReport {
  std::vector<UttScore> utterances;
  long long total_substitutions = 0;
  long long total_deletions = 0;
  long long total_insertions = 0;
  long long total_ref_words = 0;
  std::size_t sentences = 0;
  std::size_t sentences_with_error = 0;
  double wer_percent = 0.0;
  double ser_percent = 0.0;
};

struct ScoredPair {
  std::string utt_id;
  std::vector<std::string> ref;
  std::vector<std::string> hyp;
};

enum class ReportFormat { kText, kStructured };

class DuplicateUttId : public Error {
 public:
  explicit DuplicateUttId(const std::string &utt_id)
      : Error("duplicate utterance id " + utt_id), utt_id(utt_id) {}
  std::string utt_id;
};

// Dynamic programming alignment. Backtrack tie-break preference is
// Match > Substitute > Delete > Insert.
Alignment Align(const std::vector<std::string> &ref,
                const std::vector<std::string> &hyp);

ScoreReport ScoreCorpus(const std::vector<ScoredPair> &pairs);

// Text format mirrors the WER/SER summary table; structured format is
// key=value records, one per line.
std::string RenderReport(const ScoreReport &report, ReportFormat format);

}  // namespace swatk

#endif  // SWATK_SCORER_H_
