// tests/acceptance.cc

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

// Acceptance suite: eight criteria, one PASS/FAIL line each. argv[1] is the
// path to the swatk CLI binary (used by the pipeline criterion).

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#ifndef _WIN32
#include <sys/wait.h>
#endif

#include "swatk/corpus.h"
#include "swatk/g2p.h"
#include "swatk/lexicon.h"
#include "swatk/ngram.h"
#include "swatk/scorer.h"

#include "support/golden_g2p.h"
#include "support/oracles.h"
#include "support/table52.h"

namespace fs = std::filesystem;
using namespace swatk;

namespace {

struct Criterion {
  std::string name;
  std::function<void()> run;  // throws on failure
};

class Failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void Require(bool ok, const std::string &what) {
  if (!ok) throw Failure(what);
}

std::string JoinPhones(const std::vector<std::string> &phones) {
  std::string out;
  for (std::size_t i = 0; i < phones.size(); ++i) {
    if (i) out += ' ';
    out += phones[i];
  }
  return out;
}

std::vector<std::string> Words(const std::string &text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::string ReadFile(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  Require(static_cast<bool>(in), "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const fs::path &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  Require(static_cast<bool>(out), "cannot write " + path.string());
  out << content;
}

std::string g_cli;  // path to the swatk binary

int RunCli(const std::string &args) {
  int status = std::system(("\"" + g_cli + "\" " + args).c_str());
  if (status < 0) return -1;
#ifdef WEXITSTATUS
  if (WIFEXITED(status)) return WEXITSTATUS(status);
  return -1;
#else
  return status;
#endif
}

// ---------------------------------------------------------------------------
// 1. G2P golden suite

void CheckGolden(const swatk_test::GoldenWord *rows, std::size_t n,
                 Scheme scheme) {
  for (std::size_t i = 0; i < n; ++i) {
    std::string norm = NormalizeWord(rows[i].word);
    std::string got = JoinPhones(Phonemize(norm, scheme));
    Require(got == rows[i].phones,
            std::string(rows[i].word) + ": expected \"" + rows[i].phones +
                "\", got \"" + got + "\"");
  }
}

void Criterion1() {
  CheckGolden(swatk_test::kAugmented40Golden,
              std::size(swatk_test::kAugmented40Golden), Scheme::kAugmented40);
  CheckGolden(swatk_test::kBasic34Golden,
              std::size(swatk_test::kBasic34Golden), Scheme::kBasic34);
  CheckGolden(swatk_test::kAlffa36Golden,
              std::size(swatk_test::kAlffa36Golden), Scheme::kAlffa36);
}

// ---------------------------------------------------------------------------
// 2. Round-trip property, 1000 words per scheme

void Criterion2() {
  for (Scheme scheme :
       {Scheme::kBasic34, Scheme::kAlffa36, Scheme::kAugmented40}) {
    const PhoneInventory &inv = Inventory(scheme);
    swatk_test::TestRng rng(1234 + static_cast<int>(scheme));
    int done = 0;
    while (done < 1000) {
      std::string word;
      std::size_t n = 1 + rng.Below(10);
      for (std::size_t i = 0; i < n; ++i)
        word += inv.entries[rng.Below(inv.entries.size())].grapheme;
      // "ngg" canonicalizes to ng' and is outside the round-trip domain
      if (word.find("ngg") != std::string::npos) continue;
      std::string back = Detokenize(Phonemize(word, scheme), scheme);
      Require(back == word,
              std::string(SchemeName(scheme)) + ": \"" + word +
                  "\" round-tripped to \"" + back + "\"");
      ++done;
    }
  }
}

// ---------------------------------------------------------------------------
// 3. Pipeline worked example through the CLI

void Criterion3() {
  fs::path dir = fs::temp_directory_path() / "swatk_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);

  // Manifest: the worked segment plus two short utterances so the
  // dictionary covers all reference entries.
  std::string manifest =
      "utt_id\tspeaker\tgender\tpath\tduration\tsplit\ttext\n";
  manifest += std::string(swatk_test::kWorkedSegmentId) +
              "\tSpeaker_1\tF\tSpeaker_1/" + swatk_test::kWorkedSegmentId +
              ".wav\t25.000\ttrain\t" + swatk_test::kWorkedSegmentText + "\n";
  manifest +=
      "0431_swa_segment2\tSpeaker_1\tF\tSpeaker_1/0431_swa_segment2.wav\t"
      "10.000\ttrain\tMgonjwa uguzwe hospitalini.\n";
  manifest +=
      "0432_swa_segment3\tSpeaker_1\tF\tSpeaker_1/0432_swa_segment3.wav\t"
      "8.000\ttrain\tNilijizuia kusema.\n";
  WriteFile(dir / "manifest.tsv", manifest);

  int rc = RunCli("pipeline --manifest \"" + (dir / "manifest.tsv").string() +
                  "\" --scheme augmented --out-dir \"" + dir.string() +
                  "\" > \"" + (dir / "pipeline.out").string() + "\" 2>&1");
  Require(rc == 0, "pipeline exited with status " + std::to_string(rc));

  // Step 4 sample format: one transcript line per utterance.
  std::string transcript = ReadFile(dir / "train.transcription");
  std::string expected_line = "<s> " +
                              NormalizeText(swatk_test::kWorkedSegmentText) +
                              " </s> (" + swatk_test::kWorkedSegmentId + ")";
  Require(transcript.find(expected_line + "\n") != std::string::npos,
          "worked transcript line missing from train.transcription");
  std::string fileids = ReadFile(dir / "train.fileids");
  Require(fileids.find("Speaker_1/" +
                       std::string(swatk_test::kWorkedSegmentId) + "\n") !=
              std::string::npos,
          "worked file id missing from train.fileids");

  // Step 5 sample entries.
  std::string dict = ReadFile(dir / "dictionary.dic");
  for (const auto &row : swatk_test::kWorkedDictionary) {
    std::string line = std::string(row.word) + " " + row.phones + "\n";
    Require(dict.find(line) != std::string::npos,
            "dictionary is missing \"" + line.substr(0, line.size() - 1) +
                "\"");
  }

  // Phone list: duplicate-free and sorted.
  std::istringstream in(ReadFile(dir / "phones.lst"));
  std::string line, prev;
  bool first = true;
  while (std::getline(in, line)) {
    if (!first)
      Require(prev < line, "phone list not strictly sorted at \"" + line +
                               "\"");
    prev = line;
    first = false;
  }
  Require(!first, "phone list is empty");

  // Remaining artifacts exist and the CLI behaves per contract.
  Require(fs::exists(dir / "fillers.fil"), "fillers.fil missing");
  Require(fs::exists(dir / "model.arpa"), "model.arpa missing");
  Require(fs::exists(dir / "config.txt"), "config.txt missing");
  rc = RunCli("phonemize --scheme augmented --word chakula > \"" +
              (dir / "phonemize.out").string() + "\"");
  Require(rc == 0, "phonemize exited with status " + std::to_string(rc));
  Require(ReadFile(dir / "phonemize.out") == "chakula\tCH AH K UH L AH\n",
          "phonemize stdout mismatch");
  rc = RunCli("frobnicate > /dev/null 2>&1");
  Require(rc == 2,
          "unknown subcommand: expected exit 2, got " + std::to_string(rc));
  fs::remove_all(dir);
}

// ---------------------------------------------------------------------------
// 4. Scoring oracle equivalence

void Criterion4() {
  // All token strings over {a,b,c} grouped by length.
  std::vector<std::vector<std::vector<std::string>>> by_len(9);
  by_len[0].push_back({});
  for (int len = 1; len <= 8; ++len)
    for (const auto &shorter : by_len[len - 1])
      for (const char *s : {"a", "b", "c"}) {
        auto next = shorter;
        next.push_back(s);
        by_len[len].push_back(std::move(next));
      }
  long long cases = 0;
  for (int l1 = 0; l1 <= 8; ++l1)
    for (int l2 = 0; l1 + l2 <= 8; ++l2)
      for (const auto &ref : by_len[l1])
        for (const auto &hyp : by_len[l2]) {
          int got = Align(ref, hyp).Distance();
          int want = swatk_test::EditDistanceOracle(ref, hyp);
          Require(got == want, "distance mismatch on an exhaustive pair");
          ++cases;
        }
  Require(cases > 80000, "exhaustive sweep unexpectedly small");

  for (const auto &row : swatk_test::kDecodedFixture) {
    auto ref = Words(row.ref);
    auto hyp = Words(row.hyp);
    Require(Align(ref, hyp).Distance() ==
                swatk_test::EditDistanceOracle(ref, hyp),
            "distance mismatch on a decoded fixture row");
  }
}

// ---------------------------------------------------------------------------
// 5. Scoring sanity on the decoded fixture

void Criterion5() {
  std::vector<ScoredPair> pairs;
  long long oracle_errors = 0, oracle_ref = 0;
  for (int i = 0; i < swatk_test::kDecodedFixtureSize; ++i) {
    auto ref = Words(swatk_test::kDecodedFixture[i].ref);
    auto hyp = Words(swatk_test::kDecodedFixture[i].hyp);
    oracle_errors += swatk_test::EditDistanceOracle(ref, hyp);
    oracle_ref += static_cast<long long>(ref.size());
    pairs.push_back({"u" + std::to_string(i), ref, hyp});
  }
  ScoreReport r = ScoreCorpus(pairs);
  Require(r.ser_percent == 100.0, "fixture SER is not 100%");
  double oracle_wer = 100.0 * oracle_errors / oracle_ref;
  Require(std::abs(r.wer_percent - oracle_wer) < 1e-12,
          "pooled WER differs from the oracle");
}

// ---------------------------------------------------------------------------
// 6. LM normalization, ARPA round-trip, self-perplexity

void Criterion6() {
  using Sentences = std::vector<std::vector<std::string>>;
  const Sentences corpus_a = {{"paka", "kaka"}};
  const Sentences corpus_b = {
      {"paka", "kaka", "paka"},      {"kaka", "analala", "sana"},
      {"paka", "analala"},           {"mbwa", "anakula", "sana"},
      {"paka", "anakula", "samaki"}, {"mbwa", "analala"},
      {"kaka", "anapenda", "mbwa"},  {"paka", "anapenda", "samaki"},
      {"samaki", "anaogelea"},       {"mbwa", "anapenda", "kaka"}};
  const Sentences corpus_c = [] {
    Sentences s;
    for (int i = 0; i < 40; ++i)
      s.push_back({"neno" + std::to_string(i % 7),
                   "neno" + std::to_string((i * 3) % 5), "mwisho"});
    return s;
  }();

  for (const Sentences *corpus : {&corpus_a, &corpus_b, &corpus_c}) {
    for (int order : {1, 2, 3}) {
      NgramCounts counts = CountNgrams(*corpus, order);
      NgramModel model = Estimate(counts, Smoothing::kWittenBell);

      // Explicit summation over the vocabulary for every observed context.
      std::set<std::string> contexts = {""};
      for (int k = 2; k <= order; ++k)
        for (const auto &[key, c] : counts.tables[k - 1])
          contexts.insert(key.substr(0, key.rfind(' ')));
      for (const std::string &context : contexts) {
        std::vector<std::string> ctx = Words(context);
        double mass = 0.0;
        for (const std::string &w : model.vocabulary)
          mass += std::pow(10.0, model.LogProb(ctx, w));
        Require(std::abs(mass - 1.0) < 1e-6,
                "mass " + std::to_string(mass) + " for context \"" + context +
                    "\"");
      }

      // ARPA round-trip: re-emission is byte identical and repeated parses
      // agree within 1e-9 per log value (6-decimal emission quantizes the
      // first parse to within half an ulp of the in-memory model).
      std::string arpa = EmitArpa(model);
      NgramModel back = ParseArpa(arpa);
      Require(back.order == model.order, "ARPA round-trip changed the order");
      Require(EmitArpa(back) == arpa, "re-emitted ARPA differs");
      NgramModel again = ParseArpa(EmitArpa(back));
      for (int k = 1; k <= order; ++k) {
        Require(back.tables[k - 1].size() == model.tables[k - 1].size(),
                "ARPA round-trip changed a section size");
        for (const auto &[key, entry] : model.tables[k - 1]) {
          auto it = back.tables[k - 1].find(key);
          Require(it != back.tables[k - 1].end(),
                  "ARPA round-trip lost \"" + key + "\"");
          Require(std::abs(it->second.logprob - entry.logprob) <= 5e-7,
                  "logprob drift on \"" + key + "\"");
          Require(std::abs(again.tables[k - 1].at(key).logprob -
                           it->second.logprob) <= 1e-9,
                  "reparse drift on \"" + key + "\"");
          Require(entry.backoff.has_value() ==
                      it->second.backoff.has_value(),
                  "backoff presence drift on \"" + key + "\"");
          if (entry.backoff)
            Require(std::abs(*it->second.backoff - *entry.backoff) <= 5e-7,
                    "backoff drift on \"" + key + "\"");
        }
      }

      // Self-perplexity against the direct-formula oracle.
      swatk_test::WittenBellOracle oracle(*corpus, order);
      double got = Perplexity(model, *corpus);
      double want = oracle.Perplexity(*corpus);
      Require(std::isfinite(got), "self-perplexity is not finite");
      Require(std::abs(got - want) <= 1e-9 * want,
              "self-perplexity " + std::to_string(got) +
                  " differs from oracle " + std::to_string(want));
    }
  }
}

// ---------------------------------------------------------------------------
// 7. WAV validation

std::vector<std::uint8_t> WavHeader(std::uint16_t format_tag,
                                    std::uint16_t channels,
                                    std::uint32_t rate, std::uint16_t bits) {
  std::vector<std::uint8_t> h;
  auto put32 = [&h](std::uint32_t v) {
    for (int i = 0; i < 4; ++i) h.push_back((v >> (8 * i)) & 0xFF);
  };
  auto put16 = [&h](std::uint16_t v) {
    for (int i = 0; i < 2; ++i) h.push_back((v >> (8 * i)) & 0xFF);
  };
  auto tag = [&h](const char *t) {
    for (int i = 0; i < 4; ++i) h.push_back(t[i]);
  };
  tag("RIFF");
  put32(36);
  tag("WAVE");
  tag("fmt ");
  put32(16);
  put16(format_tag);
  put16(channels);
  put32(rate);
  put32(rate * channels * bits / 8);
  put16(channels * bits / 8);
  put16(bits);
  tag("data");
  put32(0);
  return h;
}

void Criterion7() {
  Require(ValidateWav(WavHeader(1, 1, 16000, 16)).ok(),
          "reference header rejected");
  struct {
    std::vector<std::uint8_t> header;
    const char *field;
  } cases[] = {
      {WavHeader(1, 1, 44100, 16), "sample_rate"},
      {WavHeader(1, 2, 16000, 16), "channels"},
      {WavHeader(1, 1, 16000, 8), "bit_depth"},
      {WavHeader(3, 1, 16000, 16), "format_tag"},
  };
  for (const auto &c : cases) {
    WavValidation v = ValidateWav(c.header);
    Require(v.issues.size() == 1,
            std::string("expected one issue for ") + c.field);
    Require(v.issues[0].field == c.field,
            std::string("expected field ") + c.field + ", got " +
                v.issues[0].field);
  }
}

// ---------------------------------------------------------------------------
// 8. Split integrity

void Criterion8() {
  CorpusManifest m;
  SplitConfig cfg;
  std::vector<std::string> train, test, eval;
  int id = 0;
  auto add = [&](int females, int males, std::vector<std::string> *list) {
    for (int i = 0; i < females + males; ++i) {
      std::string spk = "Speaker_" + std::to_string(++id);
      Gender g = i < females ? Gender::kFemale : Gender::kMale;
      for (int k = 0; k < 2; ++k) {
        Utterance u;
        u.utt_id = spk + "_seg" + std::to_string(k);
        u.speaker_id = spk;
        u.gender = g;
        u.text = "maneno mawili";
        u.audio_path = spk + "/" + u.utt_id + ".wav";
        u.duration_s = 20.0;
        m.utterances.push_back(std::move(u));
      }
      list->push_back(spk);
    }
  };
  add(10, 4, &train);
  add(6, 2, &test);
  add(3, 1, &eval);
  cfg.train_speakers = train;
  cfg.test_speakers = test;
  cfg.eval_speakers = eval;

  CorpusManifest out = SplitSpeakers(m, cfg);
  std::map<Split, std::set<std::string>> speakers;
  std::map<Split, std::map<Gender, int>> genders;
  std::set<std::string> counted;
  for (const Utterance &u : out.utterances) {
    auto it = out.split_labels.find(u.utt_id);
    Require(it != out.split_labels.end(),
            "utterance " + u.utt_id + " is unlabeled");
    speakers[it->second].insert(u.speaker_id);
    if (counted.insert(u.speaker_id).second)
      ++genders[it->second][u.gender];
  }
  Require(counted.size() == 26, "expected 26 speakers");
  Require(speakers[Split::kTrain].size() == 14, "expected 14 train speakers");
  Require(speakers[Split::kTest].size() == 8, "expected 8 test speakers");
  Require(speakers[Split::kEval].size() == 4, "expected 4 eval speakers");
  Require(genders[Split::kTrain][Gender::kFemale] == 10 &&
              genders[Split::kTrain][Gender::kMale] == 4,
          "train gender counts wrong");
  Require(genders[Split::kTest][Gender::kFemale] == 6 &&
              genders[Split::kTest][Gender::kMale] == 2,
          "test gender counts wrong");
  Require(genders[Split::kEval][Gender::kFemale] == 3 &&
              genders[Split::kEval][Gender::kMale] == 1,
          "eval gender counts wrong");
  for (const std::string &spk : speakers[Split::kTrain])
    Require(!speakers[Split::kTest].count(spk) &&
                !speakers[Split::kEval].count(spk),
            "speaker " + spk + " appears in two splits");
  for (const std::string &spk : speakers[Split::kTest])
    Require(!speakers[Split::kEval].count(spk),
            "speaker " + spk + " appears in two splits");
}

}  // namespace

int main(int argc, char **argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-swatk-cli>\n";
    return 2;
  }
  g_cli = argv[1];

  const Criterion criteria[] = {
      {"1 g2p golden suite", Criterion1},
      {"2 round-trip property", Criterion2},
      {"3 pipeline worked example", Criterion3},
      {"4 scoring oracle equivalence", Criterion4},
      {"5 scoring sanity", Criterion5},
      {"6 lm normalization", Criterion6},
      {"7 audio validation", Criterion7},
      {"8 split integrity", Criterion8},
  };
  int failures = 0;
  for (const Criterion &c : criteria) {
    try {
      c.run();
      std::cout << "PASS criterion " << c.name << "\n";
    } catch (const std::exception &e) {
      ++failures;
      std::cout << "FAIL criterion " << c.name << ": " << e.what() << "\n";
    }
  }
  return failures == 0 ? 0 : 1;
}
