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

// Pipeline stages behind the command-line tool. Each returns a process exit
// status: 0 on success, 1 when some input could not be processed. Problems
// are reported on `err` as "error: <file>: <cause>".

#ifndef STRESSKIT_CLI_COMMANDS_H_
#define STRESSKIT_CLI_COMMANDS_H_

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "stresskit/cli/config.h"

namespace stresskit::cli {

namespace fs = std::filesystem;

inline constexpr const char* kFeatureExtension = ".sfea";
inline constexpr const char* kManifestName = "features.manifest.json";

struct FeaturesArgs {
  fs::path in;   // directory of .wav files
  fs::path out;  // directory of .sfea files plus the manifest
  bool fail_fast = false;
};
int CmdFeatures(const FeaturesArgs& opt, const PipelineConfig& cfg, std::ostream& out,
                std::ostream& err);

struct AggregateArgs {
  fs::path in;   // annotation documents
  fs::path out;  // gold-label documents
};
int CmdAggregate(const AggregateArgs& opt, const PipelineConfig& cfg, std::ostream& out,
                 std::ostream& err);

struct StatsArgs {
  fs::path in;  // annotation documents
  std::optional<std::size_t> expect_files;
  std::optional<std::size_t> expect_regions;
  std::optional<double> expect_mean_duration;
  double tolerance = 0.01;  // seconds, for the mean duration
};
int CmdStats(const StatsArgs& opt, const PipelineConfig& cfg, std::ostream& out,
             std::ostream& err);

struct TrainArgs {
  fs::path features;  // .sfea directory written by `features`
  fs::path labels;    // gold-label documents
  fs::path out;       // model document
};
int CmdTrain(const TrainArgs& opt, const PipelineConfig& cfg, std::ostream& out,
             std::ostream& err);

struct DetectArgs {
  fs::path model;
  fs::path wav;    // directory of .wav files
  fs::path words;  // word-alignment documents, matched by file stem
  fs::path out;    // stress-cue documents
};
int CmdDetect(const DetectArgs& opt, const PipelineConfig& cfg, std::ostream& out,
              std::ostream& err);

struct EvalArgs {
  fs::path wav;
  fs::path labels;
  fs::path words;
  std::vector<dsp::FeatureSet> feature_sets;
  std::vector<int> windows;
  std::vector<classifier::ModelFamily> families;
  std::optional<fs::path> report;  // JSON copy of the table plus the config
};
int CmdEval(const EvalArgs& opt, const PipelineConfig& cfg, std::ostream& out,
            std::ostream& err);

// `cues` and `alignment` are either two files or two directories whose
// documents pair up by file stem; `out` follows suit.
struct TransferArgs {
  fs::path cues;
  fs::path alignment;
  fs::path out;
};
int CmdTransfer(const TransferArgs& opt, const PipelineConfig& cfg, std::ostream& out,
                std::ostream& err);

struct ModifyArgs {
  fs::path contours;
  fs::path cues;
  fs::path out;
};
int CmdModify(const ModifyArgs& opt, const PipelineConfig& cfg, std::ostream& out,
              std::ostream& err);

}  // namespace stresskit::cli

#endif  // STRESSKIT_CLI_COMMANDS_H_
