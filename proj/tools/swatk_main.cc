// tools/swatk_main.cc

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

// Corpus preparation and evaluation toolkit for Kiswahili speech-to-text
// pipelines: G2P, pronunciation dictionaries, trainer input files, n-gram
// language models and WER/SER scoring.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "swatk/corpus.h"
#include "swatk/g2p.h"
#include "swatk/lexicon.h"
#include "swatk/ngram.h"
#include "swatk/phoneset.h"
#include "swatk/scorer.h"

namespace fs = std::filesystem;
using namespace swatk;

namespace {

std::string ReadFileOrDie(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFileOrDie(const fs::path &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
  if (!out) throw Error("short write to " + path.string());
}

Scheme ParseSchemeOrDie(const std::string &name) {
  Scheme scheme;
  if (!SchemeFromName(name, &scheme))
    throw Error("unknown scheme \"" + name +
                "\" (expected basic, alffa or augmented)");
  return scheme;
}

Smoothing ParseSmoothingOrDie(const std::string &name) {
  if (name == "witten-bell") return Smoothing::kWittenBell;
  if (name == "mle") return Smoothing::kMle;
  throw Error("unknown smoothing \"" + name +
              "\" (expected witten-bell or mle)");
}

std::vector<std::string> SplitWords(const std::string &text) {
  std::vector<std::string> words;
  std::istringstream in(text);
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

std::vector<std::string> TranscriptWords(const std::string &text) {
  std::vector<std::string> words;
  for (const TranscriptLine &line : ParseTranscript(text))
    words.insert(words.end(), line.words.begin(), line.words.end());
  return words;
}

void WarnRejects(const std::vector<RejectedWord> &rejects) {
  for (const RejectedWord &r : rejects)
    std::cerr << "warning: cannot phonemize \"" << r.word << "\" (position "
              << r.position << "); word skipped\n";
}

// ---------------------------------------------------------------------------
// phonemize

int RunPhonemize(const std::string &scheme_name, const std::string &word,
                 const std::string &file) {
  Scheme scheme = ParseSchemeOrDie(scheme_name);
  std::vector<std::string> raw_words;
  if (!word.empty()) raw_words.push_back(word);
  if (!file.empty()) {
    auto more = SplitWords(ReadFileOrDie(file));
    raw_words.insert(raw_words.end(), more.begin(), more.end());
  }
  if (raw_words.empty()) throw Error("nothing to phonemize: give --word or --file");
  for (const std::string &raw : raw_words) {
    std::string norm = NormalizeWord(raw);
    std::vector<std::string> phones = Phonemize(norm, scheme);
    std::cout << norm << '\t';
    for (std::size_t i = 0; i < phones.size(); ++i) {
      if (i) std::cout << ' ';
      std::cout << phones[i];
    }
    std::cout << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------
// dict build

int RunDictBuild(const std::string &scheme_name, const std::string &input,
                 const std::string &out_dir) {
  Scheme scheme = ParseSchemeOrDie(scheme_name);
  LexiconBuildResult built =
      BuildLexicon(TranscriptWords(ReadFileOrDie(input)), scheme);
  WarnRejects(built.rejects);
  fs::create_directories(out_dir);
  WriteFileOrDie(fs::path(out_dir) / "dictionary.dic",
                 EmitDictionary(built.lexicon));
  WriteFileOrDie(fs::path(out_dir) / "fillers.fil", EmitFillerDictionary());
  WriteFileOrDie(fs::path(out_dir) / "phones.lst",
                 EmitPhoneList(built.lexicon));
  return 0;
}

// ---------------------------------------------------------------------------
// prep

int RunPrepEmit(const std::string &manifest_path,
                const std::string &split_name, const std::string &out_dir) {
  CorpusManifest manifest = ReadManifestFile(manifest_path);
  std::optional<Split> split;
  if (!split_name.empty()) {
    Split s;
    if (!SplitFromName(split_name, &s))
      throw Error("unknown split \"" + split_name + "\"");
    split = s;
  }
  std::string stem = split ? SplitName(*split) : "all";
  fs::create_directories(out_dir);
  WriteFileOrDie(fs::path(out_dir) / (stem + ".fileids"),
                 EmitFileIds(manifest, split));
  WriteFileOrDie(fs::path(out_dir) / (stem + ".transcription"),
                 EmitTranscript(manifest, split));
  return 0;
}

std::vector<std::string> SplitCommaList(const std::string &arg) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(arg);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int RunPrepSplit(const std::string &manifest_path,
                 const std::string &train_speakers,
                 const std::string &test_speakers,
                 const std::string &eval_speakers, const std::string &ratios,
                 std::uint64_t seed, const std::string &out_path) {
  CorpusManifest manifest = ReadManifestFile(manifest_path);
  SplitConfig cfg;
  cfg.seed = seed;
  if (!train_speakers.empty())
    cfg.train_speakers = SplitCommaList(train_speakers);
  if (!test_speakers.empty())
    cfg.test_speakers = SplitCommaList(test_speakers);
  if (!eval_speakers.empty())
    cfg.eval_speakers = SplitCommaList(eval_speakers);
  if (!ratios.empty()) {
    auto parts = SplitCommaList(ratios);
    if (parts.size() != 3)
      throw Error("--ratios expects three comma-separated numbers");
    cfg.train_ratio = std::stod(parts[0]);
    cfg.test_ratio = std::stod(parts[1]);
    cfg.eval_ratio = std::stod(parts[2]);
  }
  CorpusManifest split = SplitSpeakers(manifest, cfg);
  std::string text = WriteManifest(split);
  if (out_path.empty() || out_path == "-")
    std::cout << text;
  else
    WriteFileOrDie(out_path, text);
  return 0;
}

int RunPrepValidateAudio(const std::string &root,
                         const std::string &manifest_path) {
  std::vector<fs::path> files;
  if (!manifest_path.empty()) {
    CorpusManifest manifest = ReadManifestFile(manifest_path);
    for (const Utterance &u : manifest.utterances)
      files.push_back(fs::path(root) / u.audio_path);
  } else {
    for (const auto &entry : fs::recursive_directory_iterator(root))
      if (entry.is_regular_file() && entry.path().extension() == ".wav")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
  }
  int failures = 0;
  for (const fs::path &file : files) {
    std::ifstream in(file, std::ios::binary);
    std::vector<std::uint8_t> header(4096);
    in.read(reinterpret_cast<char *>(header.data()),
            static_cast<std::streamsize>(header.size()));
    header.resize(static_cast<std::size_t>(std::max<std::streamsize>(
        in.gcount(), 0)));
    WavValidation v = ValidateWav(header);
    if (v.ok()) {
      std::cout << "PASS " << file.string() << '\n';
    } else {
      ++failures;
      std::cout << "FAIL " << file.string() << ':';
      for (const WavIssue &issue : v.issues)
        std::cout << ' ' << issue.field << " (" << issue.message << ")";
      std::cout << '\n';
    }
  }
  return failures == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// lm

std::vector<std::vector<std::string>> TranscriptSentences(
    const std::string &text) {
  std::vector<std::vector<std::string>> sentences;
  for (const TranscriptLine &line : ParseTranscript(text))
    if (!line.words.empty()) sentences.push_back(line.words);
  return sentences;
}

int RunLmBuild(int order, const std::string &smoothing_name,
               const std::string &input, const std::string &out) {
  if (order < 1 || order > 5) throw Error("--order must be in [1,5]");
  Smoothing smoothing = ParseSmoothingOrDie(smoothing_name);
  auto sentences = TranscriptSentences(ReadFileOrDie(input));
  NgramModel model = Estimate(CountNgrams(sentences, order), smoothing);
  WriteFileOrDie(out, EmitArpa(model));
  return 0;
}

int RunLmPpl(const std::string &model_path, const std::string &input,
             const std::string &unk) {
  NgramModel model = ParseArpa(ReadFileOrDie(model_path));
  auto sentences = TranscriptSentences(ReadFileOrDie(input));
  if (!unk.empty()) {
    for (auto &sentence : sentences)
      for (auto &word : sentence)
        if (!model.vocabulary.count(word)) word = unk;
  }
  double ppl = Perplexity(model, sentences);
  std::printf("perplexity %.6f\n", ppl);
  return 0;
}

// ---------------------------------------------------------------------------
// score

std::map<std::string, std::vector<std::string>> LoadTrn(
    const std::string &path) {
  std::map<std::string, std::vector<std::string>> out;
  std::size_t n = 0;
  for (const TranscriptLine &line : ParseTranscript(ReadFileOrDie(path))) {
    ++n;
    if (line.utt_id.empty())
      throw Error(path + ": line " + std::to_string(n) +
                  " has no (utt_id) marker");
    if (out.count(line.utt_id)) throw DuplicateUttId(line.utt_id);
    std::string joined;
    for (const std::string &w : line.words) {
      if (!joined.empty()) joined += ' ';
      joined += w;
    }
    out[line.utt_id] = SplitWords(NormalizeText(joined));
  }
  return out;
}

int RunScore(const std::string &ref_path, const std::string &hyp_path,
             const std::string &format_name) {
  ReportFormat format;
  if (format_name == "text")
    format = ReportFormat::kText;
  else if (format_name == "structured")
    format = ReportFormat::kStructured;
  else
    throw Error("unknown format \"" + format_name + "\"");
  auto ref = LoadTrn(ref_path);
  auto hyp = LoadTrn(hyp_path);
  for (const auto &[id, words] : hyp)
    if (!ref.count(id)) throw Error("utterance " + id + " only in " + hyp_path);
  std::vector<ScoredPair> pairs;
  for (const auto &[id, words] : ref) {
    auto it = hyp.find(id);
    if (it == hyp.end()) throw Error("utterance " + id + " missing from " + hyp_path);
    pairs.push_back({id, words, it->second});
  }
  std::cout << RenderReport(ScoreCorpus(pairs), format);
  return 0;
}

// ---------------------------------------------------------------------------
// pipeline

struct PipelineOptions {
  std::string manifest_path;
  std::string scheme_name = "augmented";
  std::string out_dir;
  int order = 3;
  std::string smoothing = "witten-bell";
  std::uint64_t seed = 0;
  double reading_rate = 2.5;
  int gaussians = 16;
  int senones = 2500;
};

int RunPipeline(const PipelineOptions &opt) {
  Scheme scheme = ParseSchemeOrDie(opt.scheme_name);
  CorpusManifest manifest = ReadManifestFile(opt.manifest_path);
  if (manifest.utterances.empty()) throw Error("manifest has no utterances");
  fs::create_directories(opt.out_dir);

  // Which splits exist; unlabeled manifests are treated as all-train.
  std::set<Split> splits;
  for (const auto &[id, split] : manifest.split_labels) splits.insert(split);
  if (splits.empty()) {
    for (const Utterance &u : manifest.utterances)
      manifest.split_labels[u.utt_id] = Split::kTrain;
    splits.insert(Split::kTrain);
  }

  // Trainer input files per split.
  for (Split split : splits) {
    std::string stem = SplitName(split);
    WriteFileOrDie(fs::path(opt.out_dir) / (stem + ".fileids"),
                   EmitFileIds(manifest, split));
    WriteFileOrDie(fs::path(opt.out_dir) / (stem + ".transcription"),
                   EmitTranscript(manifest, split));
  }

  // One dictionary over the whole manifest so every split is covered.
  std::vector<std::string> all_words;
  for (const Utterance &u : manifest.utterances) {
    auto words = SplitWords(NormalizeText(u.text));
    all_words.insert(all_words.end(), words.begin(), words.end());
  }
  LexiconBuildResult built = BuildLexicon(all_words, scheme);
  WarnRejects(built.rejects);
  if (!built.rejects.empty())
    throw Error("dictionary stage: " + std::to_string(built.rejects.size()) +
                " word(s) could not be phonemized");
  WriteFileOrDie(fs::path(opt.out_dir) / "dictionary.dic",
                 EmitDictionary(built.lexicon));
  WriteFileOrDie(fs::path(opt.out_dir) / "fillers.fil",
                 EmitFillerDictionary());
  WriteFileOrDie(fs::path(opt.out_dir) / "phones.lst",
                 EmitPhoneList(built.lexicon));

  // Language model from the training split.
  Split lm_split = splits.count(Split::kTrain) ? Split::kTrain : *splits.begin();
  auto sentences =
      TranscriptSentences(EmitTranscript(manifest, lm_split));
  NgramModel model = Estimate(CountNgrams(sentences, opt.order),
                              ParseSmoothingOrDie(opt.smoothing));
  WriteFileOrDie(fs::path(opt.out_dir) / "model.arpa", EmitArpa(model));

  // Cross-file closure: every transcription word must have a dictionary
  // entry, otherwise the trainer handoff is broken.
  std::set<std::string> dict_words;
  for (const LexiconEntry &e : built.lexicon.entries)
    dict_words.insert(e.word);
  for (Split split : splits) {
    for (const TranscriptLine &line :
         ParseTranscript(EmitTranscript(manifest, split))) {
      for (const std::string &w : line.words)
        if (!dict_words.count(w))
          throw Error("closure check: word \"" + w + "\" in " +
                      std::string(SplitName(split)) +
                      ".transcription has no dictionary entry");
    }
  }

  std::ostringstream cfg;
  cfg << "scheme=" << SchemeName(scheme) << "\n"
      << "order=" << opt.order << "\n"
      << "smoothing=" << opt.smoothing << "\n"
      << "seed=" << opt.seed << "\n"
      << "reading_rate=" << opt.reading_rate << "\n"
      << "gaussian_mixtures=" << opt.gaussians << "\n"
      << "senones=" << opt.senones << "\n";
  WriteFileOrDie(fs::path(opt.out_dir) / "config.txt", cfg.str());
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Kiswahili speech-to-text corpus preparation toolkit"};
  app.require_subcommand(1);

  // phonemize
  std::string ph_scheme = "augmented", ph_word, ph_file;
  auto *phonemize = app.add_subcommand("phonemize",
                                       "Convert words to phone sequences");
  phonemize->add_option("--scheme", ph_scheme, "basic|alffa|augmented");
  phonemize->add_option("--word", ph_word, "single word to convert");
  phonemize->add_option("--file", ph_file, "file of whitespace-separated words");

  // dict build
  std::string dict_scheme = "augmented", dict_input, dict_out_dir;
  auto *dict = app.add_subcommand("dict", "Pronunciation dictionary tools");
  dict->require_subcommand(1);
  auto *dict_build = dict->add_subcommand("build",
                                          "Build dictionary, fillers and phone list");
  dict_build->add_option("--scheme", dict_scheme, "basic|alffa|augmented");
  dict_build->add_option("--input", dict_input, "transcript or word list")
      ->required();
  dict_build->add_option("--out-dir", dict_out_dir, "output directory")
      ->required();

  // prep
  auto *prep = app.add_subcommand("prep", "Corpus manifest tools");
  prep->require_subcommand(1);
  std::string pe_manifest, pe_split, pe_out_dir;
  auto *prep_emit = prep->add_subcommand("emit",
                                         "Emit fileids and transcription");
  prep_emit->add_option("--manifest", pe_manifest, "manifest TSV")->required();
  prep_emit->add_option("--split", pe_split, "train|test|eval (default: all)");
  prep_emit->add_option("--out-dir", pe_out_dir, "output directory")
      ->required();

  std::string ps_manifest, ps_train, ps_test, ps_eval, ps_ratios, ps_out;
  std::uint64_t ps_seed = 0;
  auto *prep_split = prep->add_subcommand("split",
                                          "Assign speakers to splits");
  prep_split->add_option("--manifest", ps_manifest, "manifest TSV")
      ->required();
  prep_split->add_option("--train-speakers", ps_train, "comma-separated list");
  prep_split->add_option("--test-speakers", ps_test, "comma-separated list");
  prep_split->add_option("--eval-speakers", ps_eval, "comma-separated list");
  prep_split->add_option("--ratios", ps_ratios,
                         "train,test,eval duration ratios");
  prep_split->add_option("--seed", ps_seed, "shuffle seed for ratio mode");
  prep_split->add_option("--out", ps_out, "output manifest (default stdout)");

  std::string pv_root = ".", pv_manifest;
  auto *prep_validate = prep->add_subcommand("validate-audio",
                                             "Check WAV headers");
  prep_validate->add_option("--root", pv_root, "corpus root directory");
  prep_validate->add_option("--manifest", pv_manifest,
                            "restrict to manifest audio paths");

  // lm
  auto *lm = app.add_subcommand("lm", "N-gram language model tools");
  lm->require_subcommand(1);
  int lb_order = 3;
  std::string lb_smoothing = "witten-bell", lb_input, lb_out;
  auto *lm_build = lm->add_subcommand("build", "Count, smooth and emit ARPA");
  lm_build->add_option("--order", lb_order, "n-gram order (1-5)");
  lm_build->add_option("--smoothing", lb_smoothing, "witten-bell|mle");
  lm_build->add_option("--input", lb_input, "transcription file")->required();
  lm_build->add_option("--out", lb_out, "output ARPA file")->required();

  std::string lp_model, lp_input, lp_unk;
  auto *lm_ppl = lm->add_subcommand("ppl", "Perplexity of a text");
  lm_ppl->add_option("--model", lp_model, "ARPA model")->required();
  lm_ppl->add_option("--input", lp_input, "transcription file")->required();
  lm_ppl->add_option("--unk", lp_unk,
                     "map out-of-vocabulary tokens to this symbol");

  // score
  std::string sc_ref, sc_hyp, sc_format = "text";
  auto *score = app.add_subcommand("score", "WER/SER between transcripts");
  score->add_option("--ref", sc_ref, "reference .trn")->required();
  score->add_option("--hyp", sc_hyp, "hypothesis .trn")->required();
  score->add_option("--format", sc_format, "text|structured");

  // pipeline
  PipelineOptions pl;
  auto *pipeline = app.add_subcommand("pipeline",
                                      "Manifest to trainer inputs end to end");
  pipeline->add_option("--manifest", pl.manifest_path, "manifest TSV")
      ->required();
  pipeline->add_option("--scheme", pl.scheme_name, "basic|alffa|augmented");
  pipeline->add_option("--out-dir", pl.out_dir, "output directory")
      ->required();
  pipeline->add_option("--order", pl.order, "LM order (1-5)");
  pipeline->add_option("--smoothing", pl.smoothing, "witten-bell|mle");
  pipeline->add_option("--seed", pl.seed, "split seed (recorded)");
  pipeline->add_option("--rate", pl.reading_rate, "reading rate, words/s");
  pipeline->add_option("--gaussians", pl.gaussians,
                       "trainer metadata: Gaussian mixtures");
  pipeline->add_option("--senones", pl.senones, "trainer metadata: senones");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*phonemize) return RunPhonemize(ph_scheme, ph_word, ph_file);
    if (*dict_build) return RunDictBuild(dict_scheme, dict_input, dict_out_dir);
    if (*prep_emit) return RunPrepEmit(pe_manifest, pe_split, pe_out_dir);
    if (*prep_split)
      return RunPrepSplit(ps_manifest, ps_train, ps_test, ps_eval, ps_ratios,
                          ps_seed, ps_out);
    if (*prep_validate) return RunPrepValidateAudio(pv_root, pv_manifest);
    if (*lm_build) return RunLmBuild(lb_order, lb_smoothing, lb_input, lb_out);
    if (*lm_ppl) return RunLmPpl(lp_model, lp_input, lp_unk);
    if (*score) return RunScore(sc_ref, sc_hyp, sc_format);
    if (*pipeline) return RunPipeline(pl);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
