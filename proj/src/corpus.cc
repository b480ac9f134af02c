// src/corpus.cc

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

#include "swatk/corpus.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "swatk/g2p.h"

namespace swatk {

const char *SplitName(Split s) {
  switch (s) {
    case Split::kTrain: return "train";
    case Split::kTest: return "test";
    case Split::kEval: return "eval";
  }
  return "?";
}

bool SplitFromName(std::string_view name, Split *out) {
  if (name == "train") { *out = Split::kTrain; return true; }
  if (name == "test") { *out = Split::kTest; return true; }
  if (name == "eval") { *out = Split::kEval; return true; }
  return false;
}

const char *GenderName(Gender g) {
  switch (g) {
    case Gender::kFemale: return "F";
    case Gender::kMale: return "M";
    case Gender::kUnknown: return "U";
  }
  return "U";
}

bool GenderFromName(std::string_view name, Gender *out) {
  if (name == "F" || name == "f" || name == "female") {
    *out = Gender::kFemale;
    return true;
  }
  if (name == "M" || name == "m" || name == "male") {
    *out = Gender::kMale;
    return true;
  }
  if (name == "U" || name == "u" || name == "unknown" || name.empty()) {
    *out = Gender::kUnknown;
    return true;
  }
  return false;
}

std::string NormalizeText(std::string_view raw) {
  std::string folded = FoldApostrophes(raw);
  std::string out;
  out.reserve(folded.size());
  bool pending_space = false;
  auto word_len = [&out]() {
    std::size_t n = 0;
    while (n < out.size() && out[out.size() - 1 - n] != ' ') ++n;
    return n;
  };
  for (char c : folded) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    bool keep;
    if (c >= 'a' && c <= 'z') {
      keep = true;
    } else if (c == '\'') {
      // intra-word ng' apostrophe only
      keep = word_len() >= 2 && out.compare(out.size() - 2, 2, "ng") == 0;
    } else {
      keep = false;
    }
    if (keep) {
      if (pending_space && !out.empty()) out += ' ';
      pending_space = false;
      out += c;
    } else {
      pending_space = true;
    }
  }
  return out;
}

std::vector<std::string> SplitSentences(std::string_view text,
                                        double target_seconds,
                                        double words_per_second) {
  // Sentence boundaries first, then normalize each sentence to words.
  std::vector<std::vector<std::string>> sentences;
  std::string chunk;
  auto flush_chunk = [&]() {
    std::string norm = NormalizeText(chunk);
    chunk.clear();
    if (norm.empty()) return;
    std::vector<std::string> words;
    std::istringstream in(norm);
    std::string w;
    while (in >> w) words.push_back(w);
    if (!words.empty()) sentences.push_back(std::move(words));
  };
  for (char c : text) {
    if (c == '.' || c == '!' || c == '?' || c == ';' || c == '\n') {
      flush_chunk();
    } else {
      chunk += c;
    }
  }
  flush_chunk();

  const std::size_t min_words = static_cast<std::size_t>(
      std::ceil(target_seconds * words_per_second));
  std::vector<std::string> segments;
  std::vector<std::string> current;
  auto flush_segment = [&]() {
    if (current.empty()) return;
    std::string seg;
    for (std::size_t i = 0; i < current.size(); ++i) {
      if (i) seg += ' ';
      seg += current[i];
    }
    segments.push_back(std::move(seg));
    current.clear();
  };
  for (auto &s : sentences) {
    current.insert(current.end(), s.begin(), s.end());
    if (current.size() >= min_words) flush_segment();
  }
  flush_segment();  // tail may fall short of the window
  return segments;
}

std::vector<const Utterance *> SelectSplit(const CorpusManifest &manifest,
                                           std::optional<Split> split) {
  std::vector<const Utterance *> out;
  for (const Utterance &u : manifest.utterances) {
    if (!split) {
      out.push_back(&u);
      continue;
    }
    auto it = manifest.split_labels.find(u.utt_id);
    if (it != manifest.split_labels.end() && it->second == *split)
      out.push_back(&u);
  }
  return out;
}

namespace {

std::string FileId(const Utterance &u) {
  if (!u.audio_path.empty()) {
    std::string id = u.audio_path;
    if (id.size() > 4 && id.compare(id.size() - 4, 4, ".wav") == 0)
      id.resize(id.size() - 4);
    return id;
  }
  return u.speaker_id + "/" + u.utt_id;
}

}  // namespace

std::string EmitFileIds(const CorpusManifest &manifest,
                        std::optional<Split> split) {
  std::string out;
  for (const Utterance *u : SelectSplit(manifest, split)) {
    out += FileId(*u);
    out += '\n';
  }
  return out;
}

std::string EmitTranscript(const CorpusManifest &manifest,
                           std::optional<Split> split) {
  std::string out;
  for (const Utterance *u : SelectSplit(manifest, split)) {
    std::string text = NormalizeText(u->text);
    if (text.empty()) throw MissingText(u->utt_id);
    out += "<s> " + text + " </s> (" + u->utt_id + ")\n";
  }
  return out;
}

namespace {

// Minimal stateless PRNG (splitmix64) so shuffles are identical across
// platforms and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t Next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
 private:
  std::uint64_t state_;
};

}  // namespace

CorpusManifest SplitSpeakers(const CorpusManifest &manifest,
                             const SplitConfig &cfg) {
  // Speakers in first-appearance order, with duration weights.
  std::vector<std::string> speakers;
  std::map<std::string, double> weight;
  for (const Utterance &u : manifest.utterances) {
    if (u.speaker_id.empty())
      throw InfeasibleSplit("utterance " + u.utt_id + " has no speaker");
    if (!weight.count(u.speaker_id)) speakers.push_back(u.speaker_id);
    weight[u.speaker_id] += u.duration_s.value_or(1.0);
  }

  std::map<std::string, Split> assignment;
  const bool explicit_mode =
      cfg.train_speakers || cfg.test_speakers || cfg.eval_speakers;
  if (explicit_mode) {
    auto apply = [&](const std::optional<std::vector<std::string>> &list,
                     Split split) {
      if (!list) return;
      for (const std::string &spk : list.value()) {
        if (!weight.count(spk))
          throw InfeasibleSplit("speaker " + spk + " is not in the manifest");
        auto [it, inserted] = assignment.emplace(spk, split);
        if (!inserted && it->second != split)
          throw InfeasibleSplit("speaker " + spk +
                                " is listed in more than one split");
      }
    };
    apply(cfg.train_speakers, Split::kTrain);
    apply(cfg.test_speakers, Split::kTest);
    apply(cfg.eval_speakers, Split::kEval);
  } else {
    const double ratios[3] = {cfg.train_ratio.value_or(0.0),
                              cfg.test_ratio.value_or(0.0),
                              cfg.eval_ratio.value_or(0.0)};
    double total_ratio = ratios[0] + ratios[1] + ratios[2];
    if (!(total_ratio > 0.0) || ratios[0] < 0 || ratios[1] < 0 ||
        ratios[2] < 0)
      throw InfeasibleSplit("split ratios must be nonnegative with a "
                            "positive sum");
    double grand_total = 0.0;
    for (const std::string &spk : speakers) grand_total += weight[spk];

    std::vector<std::string> shuffled = speakers;
    SplitMix64 rng(cfg.seed);
    for (std::size_t i = shuffled.size(); i > 1; --i)
      std::swap(shuffled[i - 1], shuffled[rng.Next() % i]);

    double assigned[3] = {0, 0, 0};
    static const Split kSplits[3] = {Split::kTrain, Split::kTest,
                                     Split::kEval};
    for (const std::string &spk : shuffled) {
      int best = -1;
      double best_deficit = 0.0;
      for (int i = 0; i < 3; ++i) {
        if (ratios[i] <= 0.0) continue;
        double deficit = ratios[i] / total_ratio * grand_total - assigned[i];
        if (best < 0 || deficit > best_deficit) {
          best = i;
          best_deficit = deficit;
        }
      }
      assignment[spk] = kSplits[best];
      assigned[best] += weight[spk];
    }
  }

  CorpusManifest out;
  out.utterances = manifest.utterances;
  for (const Utterance &u : out.utterances) {
    auto it = assignment.find(u.speaker_id);
    if (it != assignment.end()) out.split_labels[u.utt_id] = it->second;
  }
  return out;
}

namespace {

std::uint32_t ReadLe32(std::span<const std::uint8_t> b, std::size_t off) {
  return static_cast<std::uint32_t>(b[off]) |
         (static_cast<std::uint32_t>(b[off + 1]) << 8) |
         (static_cast<std::uint32_t>(b[off + 2]) << 16) |
         (static_cast<std::uint32_t>(b[off + 3]) << 24);
}

std::uint16_t ReadLe16(std::span<const std::uint8_t> b, std::size_t off) {
  return static_cast<std::uint16_t>(
      b[off] | (static_cast<std::uint16_t>(b[off + 1]) << 8));
}

bool TagIs(std::span<const std::uint8_t> b, std::size_t off,
           const char *tag) {
  for (int i = 0; i < 4; ++i)
    if (b[off + i] != static_cast<std::uint8_t>(tag[i])) return false;
  return true;
}

}  // namespace

WavValidation ValidateWav(std::span<const std::uint8_t> header) {
  WavValidation result;
  if (header.size() < 12 || !TagIs(header, 0, "RIFF") ||
      !TagIs(header, 8, "WAVE")) {
    result.issues.push_back({"riff", "not a RIFF/WAVE file"});
    return result;
  }
  // Chunk scan for "fmt ".
  std::size_t off = 12;
  while (off + 8 <= header.size()) {
    std::uint32_t chunk_size = ReadLe32(header, off + 4);
    if (TagIs(header, off, "fmt ")) {
      if (chunk_size < 16 || off + 8 + 16 > header.size()) {
        result.issues.push_back({"fmt", "fmt chunk truncated"});
        return result;
      }
      std::size_t d = off + 8;
      AudioSpec spec;
      spec.format_tag = ReadLe16(header, d);
      spec.channels = ReadLe16(header, d + 2);
      spec.sample_rate = ReadLe32(header, d + 4);
      spec.bit_depth = ReadLe16(header, d + 14);
      result.spec = spec;
      const AudioSpec want;
      auto mismatch = [&result](const char *field, std::uint32_t expected,
                                std::uint32_t found) {
        result.issues.push_back(
            {field, std::string("expected ") + std::to_string(expected) +
                        ", found " + std::to_string(found)});
      };
      if (spec.format_tag != want.format_tag)
        mismatch("format_tag", want.format_tag, spec.format_tag);
      if (spec.channels != want.channels)
        mismatch("channels", want.channels, spec.channels);
      if (spec.sample_rate != want.sample_rate)
        mismatch("sample_rate", want.sample_rate, spec.sample_rate);
      if (spec.bit_depth != want.bit_depth)
        mismatch("bit_depth", want.bit_depth, spec.bit_depth);
      return result;
    }
    // Chunks are word aligned.
    off += 8 + chunk_size + (chunk_size & 1);
  }
  result.issues.push_back({"fmt", "no fmt chunk"});
  return result;
}

static const char kManifestHeader[] =
    "utt_id\tspeaker\tgender\tpath\tduration\tsplit\ttext";

std::string WriteManifest(const CorpusManifest &manifest) {
  std::string out = kManifestHeader;
  out += '\n';
  for (const Utterance &u : manifest.utterances) {
    out += u.utt_id;
    out += '\t';
    out += u.speaker_id;
    out += '\t';
    out += GenderName(u.gender);
    out += '\t';
    out += u.audio_path;
    out += '\t';
    if (u.duration_s) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.3f", *u.duration_s);
      out += buf;
    }
    out += '\t';
    auto it = manifest.split_labels.find(u.utt_id);
    if (it != manifest.split_labels.end()) out += SplitName(it->second);
    out += '\t';
    // text is the last field; embedded tabs would shift columns
    std::string text = u.text;
    std::replace(text.begin(), text.end(), '\t', ' ');
    out += text;
    out += '\n';
  }
  return out;
}

CorpusManifest ParseManifest(const std::string &text) {
  CorpusManifest manifest;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool saw_header = false;
  std::map<std::string, bool> seen_ids;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (!saw_header) {
      if (fields.empty() || fields[0] != "utt_id")
        throw ManifestError("manifest line 1: missing header row");
      saw_header = true;
      continue;
    }
    if (fields.size() < 4)
      throw ManifestError("manifest line " + std::to_string(lineno) +
                          ": expected at least 4 tab-separated fields");
    Utterance u;
    u.utt_id = fields[0];
    if (u.utt_id.empty() ||
        u.utt_id.find_first_of(" \t()") != std::string::npos)
      throw ManifestError("manifest line " + std::to_string(lineno) +
                          ": bad utt_id \"" + u.utt_id + "\"");
    if (seen_ids[u.utt_id])
      throw ManifestError("manifest line " + std::to_string(lineno) +
                          ": duplicate utt_id " + u.utt_id);
    seen_ids[u.utt_id] = true;
    u.speaker_id = fields[1];
    if (!GenderFromName(fields[2], &u.gender))
      throw ManifestError("manifest line " + std::to_string(lineno) +
                          ": bad gender \"" + fields[2] + "\"");
    u.audio_path = fields[3];
    if (fields.size() > 4 && !fields[4].empty()) {
      try {
        u.duration_s = std::stod(fields[4]);
      } catch (const std::exception &) {
        throw ManifestError("manifest line " + std::to_string(lineno) +
                            ": bad duration \"" + fields[4] + "\"");
      }
    }
    if (fields.size() > 5 && !fields[5].empty()) {
      Split split;
      if (!SplitFromName(fields[5], &split))
        throw ManifestError("manifest line " + std::to_string(lineno) +
                            ": bad split \"" + fields[5] + "\"");
      manifest.split_labels[u.utt_id] = split;
    }
    if (fields.size() > 6) u.text = fields[6];
    manifest.utterances.push_back(std::move(u));
  }
  if (!saw_header) throw ManifestError("empty manifest");
  return manifest;
}

CorpusManifest ReadManifestFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ManifestError("cannot open manifest " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseManifest(buf.str());
}

std::vector<TranscriptLine> ParseTranscript(const std::string &text) {
  std::vector<TranscriptLine> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> tokens;
    std::istringstream fields(line);
    std::string tok;
    while (fields >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    TranscriptLine tl;
    if (tokens.size() >= 2 && tokens.back().size() >= 2 &&
        tokens.back().front() == '(' && tokens.back().back() == ')') {
      tl.utt_id = tokens.back().substr(1, tokens.back().size() - 2);
      tokens.pop_back();
    }
    if (!tokens.empty() && tokens.front() == "<s>")
      tokens.erase(tokens.begin());
    if (!tokens.empty() && tokens.back() == "</s>") tokens.pop_back();
    tl.words = std::move(tokens);
    lines.push_back(std::move(tl));
  }
  return lines;
}

}  // namespace swatk
