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

// Multi-annotator stress regions -> gold frame labels, plus Fleiss' kappa.
//
// Frame membership is decided by frame centers against half-open intervals
// [start_s, end_s). A frame is gold-stressed iff strictly more than half of
// the annotators have some region covering its center.

#ifndef STRESSKIT_ANNOTATION_H_
#define STRESSKIT_ANNOTATION_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stresskit/dsp/framing.h"
#include "stresskit/types.h"

namespace stresskit::annotation {

// counts[i][j] = number of raters assigning item i to category j. Every row
// must sum to the same n >= 2. Throws DegenerateAgreement when all ratings
// fall in a single category (expected agreement 1).
double FleissKappa(const std::vector<std::vector<int>>& counts);

// Number of grid frames covering `duration_s` of audio.
std::size_t FrameCountForDuration(double duration_s, const dsp::FrameConfig& grid);

Labels RegionsToFrameLabels(std::span<const StressRegion> regions, std::size_t n_frames,
                            const dsp::FrameConfig& grid);

// Runs of stressed frames as regions [center(first), center(last + 1)), so
// that RegionsToFrameLabels reproduces the labels exactly.
std::vector<StressRegion> FrameLabelsToRegions(const Labels& labels,
                                               const dsp::FrameConfig& grid);

struct AggregateOptions {
  int min_annotators = 3;
  // When set, utterances whose kappa falls below it are rejected.
  std::optional<double> min_kappa;
};

// Kappa is computed over per-frame stressed/unstressed ratings. When every
// annotator rates every frame identically with a single category (e.g. no
// regions at all) kappa is undefined; 1.0 is reported since observed
// agreement is perfect.
GoldLabels AggregateRegions(const AnnotationSet& set, const dsp::FrameConfig& grid,
                            const AggregateOptions& options = {});
GoldLabels AggregateRegions(const AnnotationSet& set, std::size_t n_frames,
                            const dsp::FrameConfig& grid,
                            const AggregateOptions& options = {});

// Majority regions in continuous time (no frame grid): maximal intervals
// covered by strictly more than half of the annotators.
std::vector<StressRegion> MajorityRegions(const AnnotationSet& set);

struct DatasetStats {
  std::size_t files = 0;
  std::size_t regions = 0;
  double total_region_s = 0.0;
  double mean_region_s = 0.0;
  double total_audio_s = 0.0;
  std::map<std::string, std::size_t> files_per_speaker;
  std::map<std::string, std::size_t> regions_per_speaker;
};

// Regions are counted after majority aggregation (MajorityRegions).
DatasetStats ComputeDatasetStats(std::span<const AnnotationSet> sets);

}  // namespace stresskit::annotation

#endif  // STRESSKIT_ANNOTATION_H_
