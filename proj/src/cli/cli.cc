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

#include "stresskit/cli/cli.h"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>

#include "CLI11.hpp"

#include "stresskit/cli/commands.h"
#include "stresskit/error.h"

namespace stresskit::cli {

namespace {

// Flags shared by every subcommand. `eval` accepts --window, --features and
// --model repeatedly to select the combinations it reports.
struct CommonFlags {
  std::string config;
  std::uint64_t seed = 0;
  int jobs = 0;
  std::vector<int> windows;
  std::vector<std::string> feature_sets;
  std::vector<std::string> models;
  std::string clamp;
  double duration_scale = 1.0;

  CLI::Option* config_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* jobs_opt = nullptr;
  CLI::Option* duration_opt = nullptr;
  CLI::Option* clamp_opt = nullptr;
};

void AddCommonFlags(CLI::App* app, CommonFlags& f, bool repeatable) {
  f.config_opt = app->add_option("--config", f.config, "JSON pipeline configuration")
                     ->check(CLI::ExistingFile);
  f.seed_opt = app->add_option("--seed", f.seed, "Seed for every random component");
  f.jobs_opt = app->add_option("--jobs", f.jobs, "Worker threads (0: all cores)")
                   ->check(CLI::NonNegativeNumber);
  auto* window = app->add_option("--window", f.windows, "Context window {3|5|7}")
                     ->check(CLI::IsMember({3, 5, 7}));
  auto* features = app->add_option("--features", f.feature_sets, "Feature set {f0e|full}")
                       ->check(CLI::IsMember({"f0e", "full"}));
  auto* model = app->add_option("--model", f.models, "Classifier {svc|rfc|lpa}")
                    ->check(CLI::IsMember({"svc", "rfc", "lpa"}));
  for (CLI::Option* o : {window, features, model}) {
    if (repeatable) {
      o->take_all()->allow_extra_args(false)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    } else {
      o->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    }
  }
  f.clamp_opt = app->add_option("--clamp", f.clamp, "Scale bounds LO:HI");
  f.duration_opt = app->add_option("--duration-scale", f.duration_scale,
                                   "Duration scale emitted for stressed words");
}

// Defaults, then the config file, then flags.
PipelineConfig Resolve(const CommonFlags& f) {
  PipelineConfig cfg;
  if (*f.config_opt) cfg = LoadConfigFile(cfg, f.config);
  if (*f.seed_opt) cfg.seed = f.seed;
  if (*f.jobs_opt) cfg.jobs = f.jobs;
  if (!f.windows.empty()) cfg.feature.window = f.windows.front();
  if (!f.feature_sets.empty()) cfg.feature.set = dsp::ParseFeatureSet(f.feature_sets.front());
  if (!f.models.empty()) cfg.model.family = classifier::ParseModelFamily(f.models.front());
  if (*f.clamp_opt) cfg.scaling.bounds = ParseClamp(f.clamp);
  if (*f.duration_opt) cfg.scaling.duration_scale = f.duration_scale;
  cfg.PropagateSeed();
  cfg.Validate();
  return cfg;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stress detection and transfer for speech-to-speech translation", "stresskit"};
  app.require_subcommand(1);

  // Each subcommand registers its flags and the action to run once the
  // configuration is resolved.
  std::vector<std::unique_ptr<CommonFlags>> flags;
  std::vector<std::pair<CLI::App*, std::function<int(const PipelineConfig&)>>> actions;
  const auto command = [&](const char* name, const char* help, bool repeatable = false) {
    CLI::App* sub = app.add_subcommand(name, help);
    flags.push_back(std::make_unique<CommonFlags>());
    AddCommonFlags(sub, *flags.back(), repeatable);
    return sub;
  };

  FeaturesArgs features;
  CLI::App* sub = command("features", "Extract frame features from a directory of WAV files");
  sub->add_option("--in", features.in, "WAV directory")->required();
  sub->add_option("--out", features.out, "Feature directory")->required();
  sub->add_flag("--fail-fast", features.fail_fast, "Stop at the first failing file");
  actions.emplace_back(sub, [&](const PipelineConfig& c) { return CmdFeatures(features, c, out, err); });

  AggregateArgs aggregate;
  sub = command("aggregate", "Merge multi-annotator regions into gold frame labels");
  sub->add_option("--in", aggregate.in, "Annotation directory")->required();
  sub->add_option("--out", aggregate.out, "Gold-label directory")->required();
  actions.emplace_back(sub, [&](const PipelineConfig& c) { return CmdAggregate(aggregate, c, out, err); });

  StatsArgs stats;
  sub = command("stats", "Summarize an annotation corpus");
  sub->add_option("--in", stats.in, "Annotation directory")->required();
  sub->add_option("--expect-files", stats.expect_files, "Fail unless the file count matches");
  sub->add_option("--expect-regions", stats.expect_regions,
                  "Fail unless the stressed-region count matches");
  sub->add_option("--expect-mean-duration", stats.expect_mean_duration,
                  "Fail unless the mean region duration (s) matches");
  sub->add_option("--tolerance", stats.tolerance, "Tolerance for --expect-mean-duration (s)")
      ->capture_default_str();
  actions.emplace_back(sub, [&](const PipelineConfig& c) { return CmdStats(stats, c, out, err); });

  TrainArgs train;
  sub = command("train", "Train a frame-level stress classifier");
  sub->add_option("--feature-dir", train.features, "Feature directory")->required();
  sub->add_option("--labels", train.labels, "Gold-label directory")->required();
  sub->add_option("--out", train.out, "Model file")->required();
  actions.emplace_back(sub, [&](const PipelineConfig& c) { return CmdTrain(train, c, out, err); });

  DetectArgs detect;
  sub = command("detect", "Detect stressed words and emit prosodic cues");
  sub->add_option("--model-file", detect.model, "Model file")->required();
  sub->add_option("--wav", detect.wav, "WAV directory")->required();
  sub->add_option("--words", detect.words, "Word-alignment directory")->required();
  sub->add_option("--out", detect.out, "Cue directory")->required();
  actions.emplace_back(sub, [&](const PipelineConfig& c) { return CmdDetect(detect, c, out, err); });

  EvalArgs eval;
  sub = command("eval", "Evaluate feature sets, windows and models on a speaker-disjoint split",
                true);
  sub->add_option("--wav", eval.wav, "WAV directory")->required();
  sub->add_option("--labels", eval.labels, "Gold-label directory")->required();
  sub->add_option("--words", eval.words, "Word-alignment directory")->required();
  sub->add_option("--report", eval.report, "Write the table and config as JSON");
  CommonFlags& eval_flags = *flags.back();
  actions.emplace_back(sub, [&](const PipelineConfig& c) {
    eval.windows = eval_flags.windows;
    for (const auto& s : eval_flags.feature_sets) eval.feature_sets.push_back(dsp::ParseFeatureSet(s));
    for (const auto& m : eval_flags.models) eval.families.push_back(classifier::ParseModelFamily(m));
    return CmdEval(eval, c, out, err);
  });

  TransferArgs transfer;
  sub = command("transfer", "Map source-word cues onto target words");
  sub->add_option("--cues", transfer.cues, "Cue file or directory")->required();
  sub->add_option("--alignment", transfer.alignment, "MT alignment file or directory")->required();
  sub->add_option("--out", transfer.out, "Target-cue file or directory")->required();
  actions.emplace_back(sub, [&](const PipelineConfig& c) { return CmdTransfer(transfer, c, out, err); });

  ModifyArgs modify;
  sub = command("modify", "Rescale token-level pitch, energy and duration");
  sub->add_option("--contours", modify.contours, "Token contour file or directory")->required();
  sub->add_option("--cues", modify.cues, "Target-cue file or directory")->required();
  sub->add_option("--out", modify.out, "Output file or directory")->required();
  actions.emplace_back(sub, [&](const PipelineConfig& c) { return CmdModify(modify, c, out, err); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  for (std::size_t i = 0; i < actions.size(); ++i) {
    if (!actions[i].first->parsed()) continue;
    PipelineConfig cfg;
    try {
      cfg = Resolve(*flags[i]);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
    try {
      return actions[i].second(cfg);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return 1;
    }
  }
  return 2;
}

}  // namespace stresskit::cli
