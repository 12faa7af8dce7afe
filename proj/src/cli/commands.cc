// Copyright 2026 The StressKit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stresskit/cli/commands.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "stresskit/annotation.h"
#include "stresskit/classifier/metrics.h"
#include "stresskit/classifier/split.h"
#include "stresskit/cli/worker_pool.h"
#include "stresskit/cue_transfer.h"
#include "stresskit/error.h"
#include "stresskit/io/digest.h"
#include "stresskit/io/documents.h"
#include "stresskit/io/feature_file.h"
#include "stresskit/io/file_util.h"
#include "stresskit/io/wav.h"
#include "stresskit/pde_modifier.h"
#include "stresskit/word_postprocess.h"

namespace stresskit::cli {

using nlohmann::json;

namespace {

enum class Status { kPending, kWritten, kSkipped, kFailed };

struct Outcome {
  Status status = Status::kPending;
  std::string message;
};

std::string Stem(const fs::path& p) { return p.stem().string(); }

fs::path Companion(const fs::path& dir, const std::string& stem, const char* ext) {
  fs::path p = dir / (stem + ext);
  if (!fs::is_regular_file(p)) {
    throw Error(ErrorCode::kIo, "missing companion file " + p.string());
  }
  return p;
}

// Runs `fn` on every file, recording per-file failures instead of aborting.
// With `fail_fast`, files not yet started after the first failure stay
// pending.
template <typename Fn>
std::vector<Outcome> RunPerFile(const std::vector<fs::path>& files, int jobs, bool fail_fast,
                                Fn&& fn) {
  std::vector<Outcome> outcomes(files.size());
  std::atomic<bool> stop{false};
  ParallelFor(files.size(), jobs, [&](std::size_t i) {
    if (stop) return;
    try {
      outcomes[i].status = fn(i);
    } catch (const std::exception& e) {
      outcomes[i] = {Status::kFailed, e.what()};
      if (fail_fast) stop = true;
    }
  });
  return outcomes;
}

// Prints failures in file order and returns their count.
std::size_t ReportFailures(const std::vector<fs::path>& files, const std::vector<Outcome>& outcomes,
                           std::ostream& err) {
  std::size_t failed = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (outcomes[i].status != Status::kFailed) continue;
    ++failed;
    err << "error: " << files[i].string() << ": " << outcomes[i].message << "\n";
  }
  return failed;
}

std::size_t CountStatus(const std::vector<Outcome>& outcomes, Status s) {
  return static_cast<std::size_t>(std::count_if(outcomes.begin(), outcomes.end(),
                                                [&](const Outcome& o) { return o.status == s; }));
}

json LoadManifest(const fs::path& path) {
  if (!fs::is_regular_file(path)) return json::object();
  try {
    json j = json::parse(io::ReadTextFile(path));
    return j.is_object() ? j : json::object();
  } catch (const json::exception&) {
    return json::object();  // a damaged manifest only disables skipping
  }
}

// Files of a batch stage given either as one file or as a directory.
struct Batch {
  bool single = false;
  std::vector<fs::path> inputs;
};

Batch ResolveBatch(const fs::path& in) {
  if (fs::is_directory(in)) return {false, io::ListFiles(in, ".json")};
  if (fs::is_regular_file(in)) return {true, {in}};
  throw Error(ErrorCode::kIo, "no such file or directory: " + in.string());
}

fs::path BatchPartner(const Batch& batch, const fs::path& partner, const fs::path& input) {
  if (batch.single) {
    if (!fs::is_regular_file(partner)) {
      throw Error(ErrorCode::kIo, "expected a file: " + partner.string());
    }
    return partner;
  }
  return Companion(partner, Stem(input), ".json");
}

fs::path BatchOutput(const Batch& batch, const fs::path& out, const fs::path& input) {
  return batch.single ? out : out / (Stem(input) + ".json");
}

std::string Fixed(double v, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

const char* FeatureSetLabel(dsp::FeatureSet set) {
  return set == dsp::FeatureSet::kF0Energy ? "F0, Energy" : "F0, Energy, MFCC, SDC";
}

std::string Upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

int CmdFeatures(const FeaturesArgs& args, const PipelineConfig& cfg, std::ostream& out,
                std::ostream& err) {
  const auto wavs = io::ListFiles(args.in, ".wav");
  fs::create_directories(args.out);
  const std::string digest = cfg.feature.Digest();
  const fs::path manifest_path = args.out / kManifestName;
  const json manifest = LoadManifest(manifest_path);
  const bool same_config = manifest.value("config_digest", std::string()) == digest &&
                           manifest.contains("files") && manifest["files"].is_object();
  const json previous = same_config ? manifest["files"] : json::object();

  std::vector<std::string> input_sha(wavs.size());
  const auto outcomes = RunPerFile(wavs, cfg.EffectiveJobs(), args.fail_fast, [&](std::size_t i) {
    const std::string stem = Stem(wavs[i]);
    const auto bytes = io::ReadBinaryFile(wavs[i]);
    input_sha[i] = io::ToHex(io::ComputeSha256(bytes));
    const fs::path target = args.out / (stem + kFeatureExtension);
    if (previous.contains(stem) && previous[stem].value("input_sha256", "") == input_sha[i] &&
        io::PeekFeatureDigest(target) == digest) {
      return Status::kSkipped;
    }
    const AudioBuffer audio = io::DecodeWav(bytes, stem);
    io::WriteFeatureMatrix(dsp::AssembleFeatures(audio, cfg.feature), target);
    return Status::kWritten;
  });

  json files = json::object();
  for (std::size_t i = 0; i < wavs.size(); ++i) {
    const Status s = outcomes[i].status;
    if (s == Status::kWritten || s == Status::kSkipped) {
      files[Stem(wavs[i])] = {{"input_sha256", input_sha[i]}};
    }
  }
  io::WriteFileAtomic(manifest_path,
                      json{{"config_digest", digest},
                           {"feature_config", dsp::FeatureConfigToJson(cfg.feature)},
                           {"files", files}}
                              .dump(2) +
                          "\n");

  const std::size_t failed = ReportFailures(wavs, outcomes, err);
  out << "features: " << wavs.size() << " files, " << CountStatus(outcomes, Status::kWritten)
      << " written, " << CountStatus(outcomes, Status::kSkipped) << " skipped, " << failed
      << " failed\n";
  return failed > 0 || CountStatus(outcomes, Status::kPending) > 0 ? 1 : 0;
}

int CmdAggregate(const AggregateArgs& args, const PipelineConfig& cfg, std::ostream& out,
                 std::ostream& err) {
  const auto files = io::ListFiles(args.in, ".json");
  fs::create_directories(args.out);
  std::vector<double> kappas(files.size(), 0.0);
  const auto outcomes = RunPerFile(files, cfg.EffectiveJobs(), false, [&](std::size_t i) {
    const AnnotationSet set = io::ParseAnnotationSet(io::ReadTextFile(files[i]));
    const GoldLabels gold = annotation::AggregateRegions(set, cfg.feature.frame, cfg.aggregate);
    kappas[i] = gold.kappa;
    io::WriteFileAtomic(args.out / files[i].filename(), io::SerializeGoldLabels(gold));
    return Status::kWritten;
  });
  const std::size_t failed = ReportFailures(files, outcomes, err);
  double kappa_sum = 0.0;
  std::size_t written = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (outcomes[i].status == Status::kWritten) {
      kappa_sum += kappas[i];
      ++written;
    }
  }
  out << "aggregate: " << files.size() << " files, " << written << " written, " << failed
      << " failed";
  if (written > 0) out << ", mean kappa " << Fixed(kappa_sum / static_cast<double>(written), 4);
  out << "\n";
  return failed > 0 ? 1 : 0;
}

int CmdStats(const StatsArgs& args, const PipelineConfig& cfg, std::ostream& out,
             std::ostream& err) {
  const auto files = io::ListFiles(args.in, ".json");
  std::vector<AnnotationSet> sets(files.size());
  const auto outcomes = RunPerFile(files, cfg.EffectiveJobs(), false, [&](std::size_t i) {
    sets[i] = io::ParseAnnotationSet(io::ReadTextFile(files[i]));
    return Status::kWritten;
  });
  if (ReportFailures(files, outcomes, err) > 0) return 1;

  const annotation::DatasetStats s = annotation::ComputeDatasetStats(sets);
  out << "files: " << s.files << "\n"
      << "stressed regions: " << s.regions << "\n"
      << "mean region duration: " << Fixed(s.mean_region_s, 3) << " s\n"
      << "total region duration: " << Fixed(s.total_region_s, 3) << " s\n"
      << "total audio: " << Fixed(s.total_audio_s, 3) << " s\n";
  if (!s.files_per_speaker.empty()) {
    out << std::left << std::setw(16) << "speaker" << std::setw(8) << "files" << "regions\n";
    for (const auto& [speaker, count] : s.files_per_speaker) {
      const auto it = s.regions_per_speaker.find(speaker);
      out << std::setw(16) << speaker << std::setw(8) << count
          << (it == s.regions_per_speaker.end() ? 0 : it->second) << "\n";
    }
    out << std::right;
  }

  bool ok = true;
  const auto expect = [&](const char* what, const std::string& want, const std::string& got,
                          bool pass) {
    if (!pass) {
      err << "error: expected " << what << " " << want << ", got " << got << "\n";
      ok = false;
    }
  };
  if (args.expect_files) {
    expect("files", std::to_string(*args.expect_files), std::to_string(s.files),
           *args.expect_files == s.files);
  }
  if (args.expect_regions) {
    expect("regions", std::to_string(*args.expect_regions), std::to_string(s.regions),
           *args.expect_regions == s.regions);
  }
  if (args.expect_mean_duration) {
    expect("mean region duration", Fixed(*args.expect_mean_duration, 3),
           Fixed(s.mean_region_s, 3),
           std::abs(*args.expect_mean_duration - s.mean_region_s) <= args.tolerance);
  }
  return ok ? 0 : 1;
}

int CmdTrain(const TrainArgs& args, const PipelineConfig& cfg, std::ostream& out,
             std::ostream& err) {
  const auto files = io::ListFiles(args.features, kFeatureExtension);
  if (files.empty()) {
    throw Error(ErrorCode::kEmpty, "no " + std::string(kFeatureExtension) + " files in " +
                                       args.features.string());
  }
  std::vector<FeatureMatrix> matrices(files.size());
  std::vector<Labels> labels(files.size());
  const auto outcomes = RunPerFile(files, cfg.EffectiveJobs(), false, [&](std::size_t i) {
    matrices[i] = io::ReadFeatureMatrix(files[i]);
    const GoldLabels gold = io::ParseGoldLabels(
        io::ReadTextFile(Companion(args.labels, Stem(files[i]), ".json")));
    if (gold.frame_labels.size() != matrices[i].rows) {
      throw Error(ErrorCode::kGridMismatch,
                  std::to_string(gold.frame_labels.size()) + " gold labels for " +
                      std::to_string(matrices[i].rows) + " feature rows");
    }
    labels[i] = gold.frame_labels;
    return Status::kWritten;
  });
  if (ReportFailures(files, outcomes, err) > 0) return 1;

  const std::string digest = matrices[0].config_digest;
  std::size_t rows = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (matrices[i].config_digest != digest || matrices[i].cols != matrices[0].cols) {
      err << "error: " << files[i].string() << ": feature layout differs from "
          << files[0].string() << "\n";
      return 1;
    }
    rows += matrices[i].rows;
  }
  Matrix x(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(matrices[0].cols));
  Labels y;
  y.reserve(rows);
  Eigen::Index r = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    x.middleRows(r, static_cast<Eigen::Index>(matrices[i].rows)) = matrices[i].ToMatrix();
    r += static_cast<Eigen::Index>(matrices[i].rows);
    y.insert(y.end(), labels[i].begin(), labels[i].end());
  }

  classifier::TrainConfig tc;
  tc.model = cfg.model;
  tc.smote = cfg.smote;
  tc.feature_digest = digest;
  const json manifest = LoadManifest(args.features / kManifestName);
  if (manifest.value("config_digest", std::string()) == digest && manifest.contains("feature_config")) {
    tc.feature_config = dsp::FeatureConfigFromJson(manifest["feature_config"]);
  } else if (cfg.feature.Digest() == digest) {
    tc.feature_config = cfg.feature;
  } else {
    err << "warning: feature configuration of " << args.features.string()
        << " is unknown; the model cannot drive `detect`\n";
  }

  const classifier::StressModel model = classifier::Train(x, y, tc);
  classifier::SaveModel(model, args.out);
  out << "train: " << classifier::ModelFamilyName(model.family) << " on " << rows << " frames ("
      << std::count(y.begin(), y.end(), 1) << " stressed) from " << files.size() << " files -> "
      << args.out.string() << "\n";
  return 0;
}

int CmdDetect(const DetectArgs& args, const PipelineConfig& cfg, std::ostream& out,
              std::ostream& err) {
  const classifier::StressModel model = classifier::LoadModel(args.model);
  if (!model.feature_config) {
    throw Error(ErrorCode::kInvalidConfig,
                args.model.string() + " does not record its feature configuration");
  }
  const dsp::FeatureConfig& fc = *model.feature_config;
  const auto wavs = io::ListFiles(args.wav, ".wav");
  fs::create_directories(args.out);
  std::vector<std::size_t> stressed(wavs.size(), 0);
  const auto outcomes = RunPerFile(wavs, cfg.EffectiveJobs(), false, [&](std::size_t i) {
    const std::string stem = Stem(wavs[i]);
    const AudioBuffer audio = io::ReadWav(wavs[i]);
    const WordAlignment words =
        io::ParseWordAlignment(io::ReadTextFile(Companion(args.words, stem, ".json")));
    const dsp::AcousticContours contours = dsp::ComputeContours(audio, fc);
    const FeatureMatrix features = dsp::AssembleFeatures(contours, fc);
    const classifier::Prediction pred = classifier::Predict(model, features);
    const auto decisions = WordLevelStress(pred.labels, words, fc.frame, features.rows);
    const auto cues = CuesForStressedWords(decisions, words, contours.f0, contours.energy,
                                           fc.frame, cfg.scaling);
    stressed[i] = cues.size();
    io::WriteFileAtomic(args.out / (stem + ".json"), io::SerializeStressCues(cues));
    return Status::kWritten;
  });
  const std::size_t failed = ReportFailures(wavs, outcomes, err);
  std::size_t total = 0;
  for (std::size_t n : stressed) total += n;
  out << "detect: " << wavs.size() << " files, " << total << " stressed words, " << failed
      << " failed\n";
  return failed > 0 ? 1 : 0;
}

int CmdEval(const EvalArgs& args, const PipelineConfig& cfg, std::ostream& out,
            std::ostream& err) {
  const auto gold_files = io::ListFiles(args.labels, ".json");
  if (gold_files.empty()) {
    throw Error(ErrorCode::kEmpty, "no gold-label documents in " + args.labels.string());
  }
  const std::size_t n = gold_files.size();

  // Contours are computed once with the full feature set; the F0+energy
  // variant simply ignores the MFCC block.
  dsp::FeatureConfig contour_cfg = cfg.feature;
  contour_cfg.set = dsp::FeatureSet::kFull;
  std::vector<GoldLabels> gold(n);
  std::vector<WordAlignment> words(n);
  std::vector<dsp::AcousticContours> contours(n);
  const auto outcomes = RunPerFile(gold_files, cfg.EffectiveJobs(), false, [&](std::size_t i) {
    const std::string stem = Stem(gold_files[i]);
    gold[i] = io::ParseGoldLabels(io::ReadTextFile(gold_files[i]));
    words[i] = io::ParseWordAlignment(io::ReadTextFile(Companion(args.words, stem, ".json")));
    contours[i] = dsp::ComputeContours(io::ReadWav(Companion(args.wav, stem, ".wav")), contour_cfg);
    if (contours[i].n_frames() != gold[i].frame_labels.size()) {
      throw Error(ErrorCode::kGridMismatch,
                  std::to_string(gold[i].frame_labels.size()) + " gold labels for " +
                      std::to_string(contours[i].n_frames()) + " frames");
    }
    return Status::kWritten;
  });
  if (ReportFailures(gold_files, outcomes, err) > 0) return 1;

  std::vector<std::string> speakers(n);
  for (std::size_t i = 0; i < n; ++i) {
    speakers[i] = gold[i].speaker.empty() ? gold[i].audio_id : gold[i].speaker;
  }
  const classifier::SplitIndices split =
      classifier::SpeakerDisjointSplit(speakers, cfg.train_fraction, cfg.seed);
  if (split.train.empty() || split.test.empty()) {
    throw Error(ErrorCode::kEmpty, "evaluation needs at least two speakers");
  }
  std::vector<WordStressDecision> gold_words;
  for (std::size_t i : split.test) {
    const auto d = WordLevelStress(gold[i].frame_labels, words[i], cfg.feature.frame,
                                   gold[i].frame_labels.size());
    gold_words.insert(gold_words.end(), d.begin(), d.end());
  }

  const auto sets = args.feature_sets.empty()
                        ? std::vector{dsp::FeatureSet::kF0Energy, dsp::FeatureSet::kFull}
                        : args.feature_sets;
  const auto windows = args.windows.empty() ? std::vector{3, 5, 7} : args.windows;
  const auto families =
      args.families.empty()
          ? std::vector{classifier::ModelFamily::kSvc, classifier::ModelFamily::kRfc,
                        classifier::ModelFamily::kLpa}
          : args.families;

  struct Row {
    dsp::FeatureSet set;
    int window;
    classifier::ModelFamily family;
    classifier::Metrics metrics;
    double post_accuracy;
  };
  std::vector<Row> rows;
  for (dsp::FeatureSet set : sets) {
    for (int window : windows) {
      dsp::FeatureConfig fc = cfg.feature;
      fc.set = set;
      fc.window = window;
      std::vector<Matrix> feats(n);
      ParallelFor(n, cfg.EffectiveJobs(),
                  [&](std::size_t i) { feats[i] = dsp::AssembleFeatures(contours[i], fc).ToMatrix(); });
      const auto stack = [&](const std::vector<std::size_t>& idx, Matrix& x, Labels& y) {
        Eigen::Index total = 0;
        for (std::size_t i : idx) total += feats[i].rows();
        x.resize(total, fc.Width());
        Eigen::Index r = 0;
        for (std::size_t i : idx) {
          x.middleRows(r, feats[i].rows()) = feats[i];
          r += feats[i].rows();
          y.insert(y.end(), gold[i].frame_labels.begin(), gold[i].frame_labels.end());
        }
      };
      Matrix x_train, x_test;
      Labels y_train, y_test;
      stack(split.train, x_train, y_train);
      stack(split.test, x_test, y_test);

      std::vector<Row> block(families.size());
      ParallelFor(families.size(), cfg.EffectiveJobs(), [&](std::size_t f) {
        PipelineConfig run = cfg;
        run.model.family = families[f];
        classifier::TrainConfig tc{run.model, run.smote, fc.Digest(), fc};
        const classifier::StressModel model = classifier::Train(x_train, y_train, tc);
        const classifier::Prediction pred = classifier::PredictMatrix(model, x_test);
        std::vector<WordStressDecision> pred_words;
        std::size_t offset = 0;
        for (std::size_t i : split.test) {
          const std::size_t len = gold[i].frame_labels.size();
          const Labels labels(pred.labels.begin() + static_cast<std::ptrdiff_t>(offset),
                              pred.labels.begin() + static_cast<std::ptrdiff_t>(offset + len));
          const auto d = WordLevelStress(labels, words[i], fc.frame, len);
          pred_words.insert(pred_words.end(), d.begin(), d.end());
          offset += len;
        }
        block[f] = {set, window, families[f], classifier::Evaluate(pred.labels, y_test),
                    PostAccuracy(pred_words, gold_words)};
      });
      rows.insert(rows.end(), block.begin(), block.end());
    }
  }

  out << "Evaluation of stress detection with different features (" << split.train.size()
      << " train / " << split.test.size() << " test utterances, speaker-disjoint)\n";
  out << std::left << std::setw(24) << "Features" << std::setw(8) << "Window" << std::setw(7)
      << "Model" << std::right << std::setw(10) << "Accuracy" << std::setw(8) << "F1"
      << std::setw(15) << "Post Accuracy" << "\n";
  json report_rows = json::array();
  for (const Row& r : rows) {
    out << std::left << std::setw(24) << FeatureSetLabel(r.set) << std::setw(8) << r.window
        << std::setw(7) << Upper(classifier::ModelFamilyName(r.family)) << std::right
        << std::setw(10) << Fixed(100.0 * r.metrics.accuracy, 2) << std::setw(8)
        << Fixed(100.0 * r.metrics.f1, 2) << std::setw(15) << Fixed(100.0 * r.post_accuracy, 2)
        << "\n";
    report_rows.push_back({{"features", dsp::FeatureSetName(r.set)},
                           {"window", r.window},
                           {"model", classifier::ModelFamilyName(r.family)},
                           {"accuracy", r.metrics.accuracy},
                           {"precision", r.metrics.precision},
                           {"recall", r.metrics.recall},
                           {"f1", r.metrics.f1},
                           {"post_accuracy", r.post_accuracy}});
  }
  if (args.report) {
    json report{{"config", PipelineConfigToJson(cfg)},
                {"train_utterances", split.train.size()},
                {"test_utterances", split.test.size()},
                {"rows", report_rows}};
    io::WriteFileAtomic(*args.report, report.dump(2) + "\n");
  }
  return 0;
}

int CmdTransfer(const TransferArgs& args, const PipelineConfig& cfg, std::ostream& out,
                std::ostream& err) {
  const Batch batch = ResolveBatch(args.cues);
  if (!batch.single) fs::create_directories(args.out);
  std::vector<std::size_t> mapped(batch.inputs.size(), 0), unmapped(batch.inputs.size(), 0);
  const auto outcomes =
      RunPerFile(batch.inputs, cfg.EffectiveJobs(), false, [&](std::size_t i) {
        const fs::path& in = batch.inputs[i];
        const auto cues = io::ParseStressCues(io::ReadTextFile(in));
        const MtAlignment mt = io::ParseMtAlignment(
            io::ReadTextFile(BatchPartner(batch, args.alignment, in)));
        const TargetCueSet target = ClampScales(MapCues(cues, mt), cfg.scaling.bounds);
        mapped[i] = target.cues.size();
        unmapped[i] = target.unmapped_sources.size();
        io::WriteFileAtomic(BatchOutput(batch, args.out, in), io::SerializeTargetCues(target));
        return Status::kWritten;
      });
  const std::size_t failed = ReportFailures(batch.inputs, outcomes, err);
  std::size_t n_mapped = 0, n_unmapped = 0;
  for (std::size_t i = 0; i < batch.inputs.size(); ++i) {
    n_mapped += mapped[i];
    n_unmapped += unmapped[i];
    if (unmapped[i] > 0) {
      err << "warning: " << batch.inputs[i].string() << ": " << unmapped[i]
          << " stressed source word(s) have no alignment link\n";
    }
  }
  out << "transfer: " << batch.inputs.size() << " files, " << n_mapped << " target cues, "
      << n_unmapped << " unmapped, " << failed << " failed\n";
  return failed > 0 ? 1 : 0;
}

int CmdModify(const ModifyArgs& args, const PipelineConfig& cfg, std::ostream& out,
              std::ostream& err) {
  const Batch batch = ResolveBatch(args.contours);
  if (!batch.single) fs::create_directories(args.out);
  std::vector<std::size_t> modified(batch.inputs.size(), 0);
  const auto outcomes =
      RunPerFile(batch.inputs, cfg.EffectiveJobs(), false, [&](std::size_t i) {
        const fs::path& in = batch.inputs[i];
        const TokenContours contours = io::ParseTokenContours(io::ReadTextFile(in));
        const TargetCueSet cues = ClampScales(
            io::ParseTargetCues(io::ReadTextFile(BatchPartner(batch, args.cues, in))),
            cfg.scaling.bounds);
        const ModifiedContours result = ApplyCues(contours, cues);
        for (std::size_t w : contours.token_word_index) {
          for (const auto& c : cues.cues) modified[i] += c.word_index == w ? 1 : 0;
        }
        io::WriteFileAtomic(BatchOutput(batch, args.out, in), io::SerializeModifiedContours(result));
        return Status::kWritten;
      });
  const std::size_t failed = ReportFailures(batch.inputs, outcomes, err);
  std::size_t total = 0;
  for (std::size_t m : modified) total += m;
  out << "modify: " << batch.inputs.size() << " files, " << total << " tokens rescaled, "
      << failed << " failed\n";
  return failed > 0 ? 1 : 0;
}

}  // namespace stresskit::cli
