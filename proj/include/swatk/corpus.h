// include/swatk/corpus.h

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

#ifndef SWATK_CORPUS_H_
#define SWATK_CORPUS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "swatk/error.h"

namespace swatk {

enum class Gender { kFemale, kMale, kUnknown };
enum class Split { kTrain, kTest, kEval };

const char *SplitName(Split s);  // "train" | "test" | "eval"
bool SplitFromName(std::string_view name, Split *out);
const char *GenderName(Gender g);  // "F" | "M" | "U"
bool GenderFromName(std::string_view name, Gender *out);

// One audio-transcript pair. audio_path is <speaker_dir>/<utt_id>.wav
// relative to the corpus root.
struct Utterance {
  std::string utt_id;
  std::string speaker_id;
  Gender gender = Gender::kUnknown;
  std::string text;  // raw transcript; normalized on emission
  std::string audio_path;
  std::optional<double> duration_s;
};

struct CorpusManifest {
  std::vector<Utterance> utterances;
  std::map<std::string, Split> split_labels;  // utt_id -> split
};

// The only audio format accepted for training input.
struct AudioSpec {
  std::uint16_t format_tag = 1;  // PCM
  std::uint16_t channels = 1;
  std::uint32_t sample_rate = 16000;
  std::uint16_t bit_depth = 16;
};

struct WavIssue {
  std::string field;  // "riff", "fmt", "format_tag", "channels", ...
  std::string message;
};

struct WavValidation {
  std::optional<AudioSpec> spec;  // decoded values, when the header parses
  std::vector<WavIssue> issues;
  bool ok() const { return issues.empty(); }
};

// Per-split speaker assignment. Either explicit speaker lists or target
// ratios with a shuffle seed; never both for the same run.
struct SplitConfig {
  std::optional<std::vector<std::string>> train_speakers;
  std::optional<std::vector<std::string>> test_speakers;
  std::optional<std::vector<std::string>> eval_speakers;
  std::optional<double> train_ratio, test_ratio, eval_ratio;
  std::uint64_t seed = 0;
};

class InfeasibleSplit : public Error {
 public:
  using Error::Error;
};

class MissingText : public Error {
 public:
  explicit MissingText(const std::string &utt_id)
      : Error("utterance " + utt_id + " has empty normalized text"),
        utt_id(utt_id) {}
  std::string utt_id;
};

class ManifestError : public Error {
 public:
  using Error::Error;
};

// Lowercases, folds typographic apostrophes, replaces punctuation with
// spaces (keeping intra-word ng' apostrophes), collapses whitespace.
std::string NormalizeText(std::string_view raw);

// Splits at sentence punctuation, then packs sentences into segments whose
// estimated duration (words / words_per_second) lands in
// [target_seconds, 1.5 * target_seconds] where achievable. The concatenated
// segments preserve the normalized word sequence exactly.
std::vector<std::string> SplitSentences(std::string_view text,
                                        double target_seconds,
                                        double words_per_second);

// Utterances of one split (or all when nullopt), in manifest order.
std::vector<const Utterance *> SelectSplit(const CorpusManifest &manifest,
                                           std::optional<Split> split);

// One "<speaker_dir>/<utt_id>" line per utterance, no extension.
std::string EmitFileIds(const CorpusManifest &manifest,
                        std::optional<Split> split);

// One "<s> <normalized text> </s> (<utt_id>)" line per utterance, aligned
// line-for-line with EmitFileIds. Throws MissingText.
std::string EmitTranscript(const CorpusManifest &manifest,
                           std::optional<Split> split);

// Assigns each speaker's whole utterance set to one split. Explicit lists
// are validated for overlap; ratio mode shuffles speakers by the seed and
// greedily approaches the target duration ratios. Deterministic for a
// fixed seed. Throws InfeasibleSplit.
CorpusManifest SplitSpeakers(const CorpusManifest &manifest,
                             const SplitConfig &cfg);

// Parses a RIFF/WAVE header and checks it against the accepted spec
// (PCM, mono, 16 kHz, 16 bit). Problems come back as issues, not throws.
WavValidation ValidateWav(std::span<const std::uint8_t> header);

// Line-delimited manifest persistence (TSV with a header row).
std::string WriteManifest(const CorpusManifest &manifest);
CorpusManifest ParseManifest(const std::string &text);
CorpusManifest ReadManifestFile(const std::string &path);

// One line of a transcript file in EmitTranscript format. utt_id is empty
// when the line carries no trailing (id).
struct TranscriptLine {
  std::string utt_id;
  std::vector<std::string> words;
};

// Accepts EmitTranscript output as well as plain text lines; sentence
// markers and the trailing (utt_id) are stripped. Blank lines are skipped.
std::vector<TranscriptLine> ParseTranscript(const std::string &text);

}  // namespace swatk

#endif  // SWATK_CORPUS_H_
