// src/ngram.cc

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

#include "swatk/ngram.h"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace swatk {

namespace {

std::string Join(const std::vector<std::string> &tokens, std::size_t begin,
                 std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    if (i > begin) out += ' ';
    out += tokens[i];
  }
  return out;
}

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

}  // namespace

NgramCounts CountNgrams(const std::vector<std::vector<std::string>> &sentences,
                        int order) {
  NgramCounts counts;
  counts.order = order;
  counts.tables.resize(order);
  for (const auto &sentence : sentences) {
    if (sentence.empty()) continue;
    std::vector<std::string> padded;
    padded.reserve(sentence.size() + order);
    for (int i = 0; i < order - 1; ++i) padded.push_back(kSentStart);
    padded.insert(padded.end(), sentence.begin(), sentence.end());
    padded.push_back(kSentEnd);
    for (int k = 1; k <= order; ++k) {
      for (std::size_t i = 0; i + k <= padded.size(); ++i)
        ++counts.tables[k - 1][Join(padded, i, i + k)];
    }
    counts.vocabulary.insert(sentence.begin(), sentence.end());
  }
  if (!counts.vocabulary.empty()) {
    counts.vocabulary.insert(kSentStart);
    counts.vocabulary.insert(kSentEnd);
  }
  return counts;
}

namespace {

// Per-context view of a k-gram table: continuation sum and distinct count.
struct ContextStats {
  long long total = 0;
  long long distinct = 0;
};

std::map<std::string, ContextStats> CollectContexts(
    const std::map<std::string, long long> &table) {
  std::map<std::string, ContextStats> stats;
  for (const auto &[key, count] : table) {
    std::size_t sp = key.rfind(' ');
    std::string context = (sp == std::string::npos) ? "" : key.substr(0, sp);
    stats[context].total += count;
    stats[context].distinct += 1;
  }
  return stats;
}

double Log10Clamped(double p) {
  return p > 0.0 ? std::log10(p) : kNegInf;
}

}  // namespace

NgramModel Estimate(const NgramCounts &counts, Smoothing smoothing) {
  if (counts.order < 1 || counts.tables.empty() || counts.tables[0].empty())
    throw EmptyCounts();
  NgramModel model;
  model.order = counts.order;
  model.tables.resize(counts.order);
  model.vocabulary = counts.vocabulary;
  model.has_backoff =
      smoothing == Smoothing::kWittenBell && counts.order > 1;

  // Unigrams.
  const auto &unigrams = counts.tables[0];
  long long total = 0;
  for (const auto &[w, c] : unigrams) total += c;
  if (smoothing == Smoothing::kMle) {
    for (const auto &[w, c] : unigrams)
      model.tables[0][w] = {Log10Clamped(static_cast<double>(c) / total), {}};
  } else {
    // Witten-Bell with the leftover mass floored uniformly across the
    // vocabulary, so every vocabulary word has nonzero probability.
    const double types = static_cast<double>(unigrams.size());
    const double denom = static_cast<double>(total) + types;
    const double floor = (types / denom) / counts.vocabulary.size();
    for (const std::string &w : counts.vocabulary) {
      auto it = unigrams.find(w);
      double c = it == unigrams.end() ? 0.0 : static_cast<double>(it->second);
      model.tables[0][w] = {Log10Clamped(c / denom + floor), {}};
    }
  }

  // Higher orders, bottom up so backoff weights can consult level k-1.
  for (int k = 2; k <= counts.order; ++k) {
    const auto &table = counts.tables[k - 1];
    auto stats = CollectContexts(table);
    for (const auto &[key, c] : table) {
      std::size_t sp = key.rfind(' ');
      const ContextStats &cs = stats[key.substr(0, sp)];
      double denom = static_cast<double>(cs.total);
      if (smoothing == Smoothing::kWittenBell)
        denom += static_cast<double>(cs.distinct);
      model.tables[k - 1][key] = {Log10Clamped(c / denom), {}};
    }
    if (smoothing != Smoothing::kWittenBell) continue;

    // bow(h) = leftover mass / lower-order mass of the unseen set.
    for (const auto &[context, cs] : stats) {
      std::vector<std::string> ctx_tokens;
      {
        std::istringstream in(context);
        std::string tok;
        while (in >> tok) ctx_tokens.push_back(tok);
      }
      std::vector<std::string> backed(ctx_tokens.begin() + 1,
                                      ctx_tokens.end());
      double seen_lower = 0.0;
      for (const auto &[key, c] : table) {
        if (key.size() <= context.size() ||
            key.compare(0, context.size(), context) != 0 ||
            key[context.size()] != ' ')
          continue;
        std::string word = key.substr(context.size() + 1);
        seen_lower += std::pow(10.0, model.LogProb(backed, word));
      }
      double numer = static_cast<double>(cs.distinct) /
                     (static_cast<double>(cs.total) + cs.distinct);
      double unseen_lower = 1.0 - seen_lower;
      // A context covering the whole vocabulary leaves nothing to back
      // off to; <s> in the vocabulary keeps this from happening in
      // practice, but guard the division anyway.
      double bow = unseen_lower > 1e-12 ? numer / unseen_lower : 1.0;
      model.tables[k - 2][context].backoff = Log10Clamped(bow);
    }
  }
  return model;
}

double NgramModel::LogProb(const std::vector<std::string> &context,
                           const std::string &word) const {
  const std::size_t max_ctx = static_cast<std::size_t>(order - 1);
  const std::size_t begin =
      context.size() > max_ctx ? context.size() - max_ctx : 0;
  std::vector<std::string> ctx(context.begin() + begin, context.end());

  double bow_sum = 0.0;
  while (true) {
    const std::string ctx_key = Join(ctx, 0, ctx.size());
    std::string key = ctx_key;
    if (!key.empty()) key += ' ';
    key += word;
    auto it = tables[ctx.size()].find(key);
    if (it != tables[ctx.size()].end()) return bow_sum + it->second.logprob;
    if (ctx.empty() || !has_backoff) {
      if (!vocabulary.count(word)) throw UnknownToken(word);
      return kNegInf;  // in vocabulary but unassigned (MLE)
    }
    auto ctx_it = tables[ctx.size() - 1].find(ctx_key);
    if (ctx_it != tables[ctx.size() - 1].end() && ctx_it->second.backoff)
      bow_sum += *ctx_it->second.backoff;
    ctx.erase(ctx.begin());
  }
}

std::string EmitArpa(const NgramModel &model) {
  std::string out = "\\data\\\n";
  for (int k = 1; k <= model.order; ++k)
    out += "ngram " + std::to_string(k) + "=" +
           std::to_string(model.tables[k - 1].size()) + "\n";
  out += "\n";
  char buf[64];
  for (int k = 1; k <= model.order; ++k) {
    out += "\\" + std::to_string(k) + "-grams:\n";
    for (const auto &[key, entry] : model.tables[k - 1]) {
      std::snprintf(buf, sizeof(buf), "%.6f", entry.logprob + 0.0);
      out += buf;
      out += '\t';
      out += key;
      if (entry.backoff) {
        std::snprintf(buf, sizeof(buf), "%.6f", *entry.backoff + 0.0);
        out += '\t';
        out += buf;
      }
      out += '\n';
    }
    out += "\n";
  }
  out += "\\end\\\n";
  return out;
}

NgramModel ParseArpa(const std::string &text) {
  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(line);
    }
  }
  std::size_t i = 0;
  while (i < lines.size() && lines[i].find("\\data\\") == std::string::npos)
    ++i;
  if (i == lines.size()) throw MalformedHeader("missing \\data\\ header");
  ++i;

  std::vector<std::size_t> declared;  // declared[k-1]
  for (; i < lines.size(); ++i) {
    std::istringstream in(lines[i]);
    std::string word;
    if (!(in >> word)) break;  // blank line ends the header
    if (word != "ngram") break;
    std::string decl;
    if (!(in >> decl)) throw MalformedHeader("bad ngram declaration");
    std::size_t eq = decl.find('=');
    if (eq == std::string::npos)
      throw MalformedHeader("bad ngram declaration: " + decl);
    int k = std::stoi(decl.substr(0, eq));
    std::size_t n = std::stoull(decl.substr(eq + 1));
    if (k < 1) throw MalformedHeader("bad ngram order in header");
    if (static_cast<std::size_t>(k) > declared.size()) declared.resize(k, 0);
    declared[k - 1] = n;
  }
  if (declared.empty()) throw MalformedHeader("no ngram declarations");

  NgramModel model;
  model.order = static_cast<int>(declared.size());
  model.tables.resize(model.order);

  int current = 0;  // order of the section being read
  for (; i < lines.size(); ++i) {
    std::string stripped = lines[i];
    // trim
    std::size_t a = stripped.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    std::size_t b = stripped.find_last_not_of(" \t");
    stripped = stripped.substr(a, b - a + 1);
    if (stripped == "\\end\\") { current = -1; break; }
    if (stripped.size() > 2 && stripped.front() == '\\' &&
        stripped.back() == ':') {
      current = std::stoi(stripped.substr(1));
      if (current < 1 || current > model.order)
        throw MalformedHeader("section \\" + std::to_string(current) +
                              "-grams: not declared in the header");
      continue;
    }
    if (current == 0) throw MalformedEntry(i + 1);
    std::vector<std::string> fields;
    {
      std::istringstream in(stripped);
      std::string tok;
      while (in >> tok) fields.push_back(tok);
    }
    std::size_t k = static_cast<std::size_t>(current);
    if (fields.size() != k + 1 && fields.size() != k + 2)
      throw MalformedEntry(i + 1);
    NgramEntry entry;
    try {
      entry.logprob = std::stod(fields[0]);
      if (fields.size() == k + 2) entry.backoff = std::stod(fields[k + 1]);
    } catch (const std::exception &) {
      throw MalformedEntry(i + 1);
    }
    std::string key;
    for (std::size_t t = 1; t <= k; ++t) {
      if (t > 1) key += ' ';
      key += fields[t];
    }
    model.tables[k - 1][key] = entry;
  }
  if (current != -1) throw MalformedHeader("missing \\end\\");

  for (int k = 1; k <= model.order; ++k)
    if (model.tables[k - 1].size() != declared[k - 1])
      throw SectionCountMismatch(k, declared[k - 1],
                                 model.tables[k - 1].size());
  for (const auto &[key, entry] : model.tables[0])
    model.vocabulary.insert(key);
  for (const auto &table : model.tables)
    for (const auto &[key, entry] : table)
      if (entry.backoff) model.has_backoff = true;
  return model;
}

double Perplexity(const NgramModel &model,
                  const std::vector<std::vector<std::string>> &sentences) {
  double log_sum = 0.0;
  std::size_t n = 0;
  for (const auto &sentence : sentences) {
    if (sentence.empty()) continue;
    std::vector<std::string> padded;
    for (int i = 0; i < model.order - 1; ++i) padded.push_back(kSentStart);
    padded.insert(padded.end(), sentence.begin(), sentence.end());
    padded.push_back(kSentEnd);
    for (std::size_t i = static_cast<std::size_t>(model.order - 1);
         i < padded.size(); ++i) {
      std::vector<std::string> context(
          padded.begin() + (i - (model.order - 1)), padded.begin() + i);
      log_sum += model.LogProb(context, padded[i]);
      ++n;
    }
  }
  if (n == 0) throw Error("no tokens to score");
  return std::pow(10.0, -log_sum / static_cast<double>(n));
}

}  // namespace swatk
