// src/scorer.cc

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

#include "swatk/scorer.h"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <set>

namespace swatk {

Alignment Align(const std::vector<std::string> &ref,
                const std::vector<std::string> &hyp) {
  const std::size_t n = ref.size(), m = hyp.size();
  // cost[i][j]: distance between ref[0..i) and hyp[0..j).
  std::vector<std::vector<int>> cost(n + 1, std::vector<int>(m + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) cost[i][0] = static_cast<int>(i);
  for (std::size_t j = 0; j <= m; ++j) cost[0][j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      int diag = cost[i - 1][j - 1] + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      int del = cost[i - 1][j] + 1;
      int ins = cost[i][j - 1] + 1;
      cost[i][j] = std::min({diag, del, ins});
    }
  }

  // Backtrack, preferring Match > Substitute > Delete > Insert.
  Alignment result;
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && ref[i - 1] == hyp[j - 1] &&
        cost[i][j] == cost[i - 1][j - 1]) {
      result.ops.push_back({EditOp::kMatch, ref[i - 1], hyp[j - 1]});
      ++result.matches;
      --i; --j;
    } else if (i > 0 && j > 0 && ref[i - 1] != hyp[j - 1] &&
               cost[i][j] == cost[i - 1][j - 1] + 1) {
      result.ops.push_back({EditOp::kSubstitute, ref[i - 1], hyp[j - 1]});
      ++result.substitutions;
      --i; --j;
    } else if (i > 0 && cost[i][j] == cost[i - 1][j] + 1) {
      result.ops.push_back({EditOp::kDelete, ref[i - 1], ""});
      ++result.deletions;
      --i;
    } else {
      result.ops.push_back({EditOp::kInsert, "", hyp[j - 1]});
      ++result.insertions;
      --j;
    }
  }
  std::reverse(result.ops.begin(), result.ops.end());
  return result;
}

ScoreReport ScoreCorpus(const std::vector<ScoredPair> &pairs) {
  ScoreReport report;
  std::set<std::string> ids;
  for (const ScoredPair &pair : pairs) {
    if (!ids.insert(pair.utt_id).second) throw DuplicateUttId(pair.utt_id);
    Alignment a = Align(pair.ref, pair.hyp);
    UttScore s;
    s.utt_id = pair.utt_id;
    s.substitutions = a.substitutions;
    s.deletions = a.deletions;
    s.insertions = a.insertions;
    s.ref_words = static_cast<int>(pair.ref.size());
    if (s.ref_words > 0) {
      s.wer = 100.0 * a.Distance() / s.ref_words;
    } else {
      s.wer = a.Distance() > 0 ? std::numeric_limits<double>::infinity()
                               : 0.0;
    }
    report.total_substitutions += a.substitutions;
    report.total_deletions += a.deletions;
    report.total_insertions += a.insertions;
    report.total_ref_words += s.ref_words;
    ++report.sentences;
    if (a.Distance() > 0) ++report.sentences_with_error;
    report.utterances.push_back(std::move(s));
  }
  long long errors = report.total_substitutions + report.total_deletions +
                     report.total_insertions;
  if (report.total_ref_words > 0)
    report.wer_percent = 100.0 * errors / report.total_ref_words;
  else
    report.wer_percent =
        errors > 0 ? std::numeric_limits<double>::infinity() : 0.0;
  if (report.sentences > 0)
    report.ser_percent =
        100.0 * report.sentences_with_error / report.sentences;
  return report;
}

std::string RenderReport(const ScoreReport &report, ReportFormat format) {
  char buf[160];
  std::string out;
  if (format == ReportFormat::kText) {
    if (report.total_ref_words == 0 && report.sentences == 0) {
      out += "WER n/a (N=0)\nSER n/a (0 sentences)\n";
      return out;
    }
    std::snprintf(buf, sizeof(buf),
                  "WER %.2f %% (S=%lld D=%lld I=%lld N=%lld)\n",
                  report.wer_percent, report.total_substitutions,
                  report.total_deletions, report.total_insertions,
                  report.total_ref_words);
    out += buf;
    std::snprintf(buf, sizeof(buf), "SER %.2f %% (%zu of %zu sentences)\n",
                  report.ser_percent, report.sentences_with_error,
                  report.sentences);
    out += buf;
    return out;
  }
  for (const UttScore &u : report.utterances) {
    std::snprintf(buf, sizeof(buf), "utt %s S=%d D=%d I=%d N=%d\n",
                  u.utt_id.c_str(), u.substitutions, u.deletions,
                  u.insertions, u.ref_words);
    out += buf;
  }
  std::snprintf(buf, sizeof(buf), "total_substitutions=%lld\n",
                report.total_substitutions);
  out += buf;
  std::snprintf(buf, sizeof(buf), "total_deletions=%lld\n",
                report.total_deletions);
  out += buf;
  std::snprintf(buf, sizeof(buf), "total_insertions=%lld\n",
                report.total_insertions);
  out += buf;
  std::snprintf(buf, sizeof(buf), "total_ref_words=%lld\n",
                report.total_ref_words);
  out += buf;
  std::snprintf(buf, sizeof(buf), "sentences=%zu\n", report.sentences);
  out += buf;
  std::snprintf(buf, sizeof(buf), "sentences_with_error=%zu\n",
                report.sentences_with_error);
  out += buf;
  std::snprintf(buf, sizeof(buf), "wer_percent=%.6f\n", report.wer_percent);
  out += buf;
  std::snprintf(buf, sizeof(buf), "ser_percent=%.6f\n", report.ser_percent);
  out += buf;
  return out;
}

}  // namespace swatk
