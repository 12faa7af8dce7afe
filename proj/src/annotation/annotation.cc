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

#include "stresskit/annotation.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "stresskit/error.h"

namespace stresskit::annotation {
namespace {

// Sorted, merged union of one annotator's regions.
std::vector<StressRegion> Union(std::vector<StressRegion> regions) {
  std::sort(regions.begin(), regions.end(), [](const StressRegion& a, const StressRegion& b) {
    return a.start_s < b.start_s;
  });
  std::vector<StressRegion> merged;
  for (const auto& r : regions) {
    if (!merged.empty() && r.start_s <= merged.back().end_s) {
      merged.back().end_s = std::max(merged.back().end_s, r.end_s);
    } else {
      merged.push_back(r);
    }
  }
  return merged;
}

bool Covers(std::span<const StressRegion> regions, double t) {
  return std::any_of(regions.begin(), regions.end(), [t](const StressRegion& r) {
    return r.start_s <= t && t < r.end_s;
  });
}

std::string SpeakerOf(const AnnotationSet& set) {
  return set.speaker.empty() ? std::string("unknown") : set.speaker;
}

}  // namespace

double FleissKappa(const std::vector<std::vector<int>>& counts) {
  if (counts.empty()) throw Error(ErrorCode::kEmpty, "no items to rate");
  const std::size_t n_categories = counts.front().size();
  if (n_categories < 2) {
    throw Error(ErrorCode::kInvalidConfig, "Fleiss kappa needs at least two categories");
  }
  long raters = -1;
  for (const auto& row : counts) {
    if (row.size() != n_categories) {
      throw Error(ErrorCode::kSchemaError, "ragged rating matrix");
    }
    long sum = 0;
    for (int c : row) {
      if (c < 0) throw Error(ErrorCode::kSchemaError, "negative rating count");
      sum += c;
    }
    if (raters < 0) raters = sum;
    if (sum != raters) {
      throw Error(ErrorCode::kUnequalRaterCounts,
                  "items rated by " + std::to_string(raters) + " and " + std::to_string(sum) +
                      " raters");
    }
  }
  if (raters < 2) {
    throw Error(ErrorCode::kUnequalRaterCounts, "Fleiss kappa needs at least two raters");
  }

  const double n = static_cast<double>(raters);
  const double items = static_cast<double>(counts.size());
  double p_bar = 0.0;
  std::vector<double> category_totals(n_categories, 0.0);
  for (const auto& row : counts) {
    double sq = 0.0;
    for (std::size_t j = 0; j < n_categories; ++j) {
      sq += static_cast<double>(row[j]) * row[j];
      category_totals[j] += row[j];
    }
    p_bar += (sq - n) / (n * (n - 1.0));
  }
  p_bar /= items;
  double p_e = 0.0;
  for (double total : category_totals) {
    const double p = total / (items * n);
    p_e += p * p;
  }
  if (p_e >= 1.0) {
    throw Error(ErrorCode::kDegenerateAgreement,
                "all ratings fall in one category; kappa is undefined");
  }
  return (p_bar - p_e) / (1.0 - p_e);
}

std::size_t FrameCountForDuration(double duration_s, const dsp::FrameConfig& grid) {
  const auto samples = static_cast<std::size_t>(std::llround(duration_s * grid.sample_rate));
  return grid.FrameCount(samples);
}

Labels RegionsToFrameLabels(std::span<const StressRegion> regions, std::size_t n_frames,
                            const dsp::FrameConfig& grid) {
  Labels labels(n_frames, 0);
  for (std::size_t t = 0; t < n_frames; ++t) {
    labels[t] = Covers(regions, grid.CenterTime(t)) ? 1 : 0;
  }
  return labels;
}

std::vector<StressRegion> FrameLabelsToRegions(const Labels& labels,
                                               const dsp::FrameConfig& grid) {
  std::vector<StressRegion> regions;
  std::size_t t = 0;
  while (t < labels.size()) {
    if (labels[t] != 1) {
      ++t;
      continue;
    }
    const std::size_t first = t;
    while (t < labels.size() && labels[t] == 1) ++t;
    regions.push_back({grid.CenterTime(first), grid.CenterTime(t)});
  }
  return regions;
}

GoldLabels AggregateRegions(const AnnotationSet& set, const dsp::FrameConfig& grid,
                            const AggregateOptions& options) {
  if (set.sample_rate != grid.sample_rate) {
    throw Error(ErrorCode::kInvalidConfig,
                "annotations for " + set.audio_id + " are at " +
                    std::to_string(set.sample_rate) + " Hz, grid at " +
                    std::to_string(grid.sample_rate) + " Hz");
  }
  return AggregateRegions(set, FrameCountForDuration(set.duration_s, grid), grid, options);
}

GoldLabels AggregateRegions(const AnnotationSet& set, std::size_t n_frames,
                            const dsp::FrameConfig& grid, const AggregateOptions& options) {
  const std::size_t n_annotators = set.annotations.size();
  if (n_annotators == 0 || n_annotators < static_cast<std::size_t>(options.min_annotators)) {
    throw Error(ErrorCode::kTooFewAnnotators,
                set.audio_id + " has " + std::to_string(n_annotators) +
                    " annotators, need at least " + std::to_string(options.min_annotators));
  }
  std::vector<std::vector<StressRegion>> per_annotator;
  per_annotator.reserve(n_annotators);
  for (const auto& a : set.annotations) per_annotator.push_back(Union(a.regions));

  GoldLabels gold;
  gold.audio_id = set.audio_id;
  gold.speaker = set.speaker;
  gold.frame_labels.assign(n_frames, 0);
  std::vector<std::vector<int>> ratings(n_frames, std::vector<int>(2, 0));
  for (std::size_t t = 0; t < n_frames; ++t) {
    const double center = grid.CenterTime(t);
    int votes = 0;
    for (const auto& regions : per_annotator) votes += Covers(regions, center) ? 1 : 0;
    ratings[t] = {static_cast<int>(n_annotators) - votes, votes};
    gold.frame_labels[t] = 2 * static_cast<std::size_t>(votes) > n_annotators ? 1 : 0;
  }
  gold.gold_regions = FrameLabelsToRegions(gold.frame_labels, grid);

  gold.kappa = 1.0;
  if (n_annotators >= 2 && n_frames > 0) {
    try {
      gold.kappa = FleissKappa(ratings);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kDegenerateAgreement) throw;
    }
  }
  if (options.min_kappa && gold.kappa < *options.min_kappa) {
    throw Error(ErrorCode::kRangeError,
                set.audio_id + ": kappa " + std::to_string(gold.kappa) + " below minimum " +
                    std::to_string(*options.min_kappa));
  }
  return gold;
}

std::vector<StressRegion> MajorityRegions(const AnnotationSet& set) {
  const std::size_t n_annotators = set.annotations.size();
  std::vector<std::pair<double, int>> events;
  for (const auto& a : set.annotations) {
    for (const auto& r : Union(a.regions)) {
      events.emplace_back(r.start_s, +1);
      events.emplace_back(r.end_s, -1);
    }
  }
  // Ends before starts at equal times: intervals are half-open.
  std::sort(events.begin(), events.end());
  std::vector<StressRegion> out;
  int coverage = 0;
  double open_at = 0.0;
  bool open = false;
  for (const auto& [time, delta] : events) {
    coverage += delta;
    const bool majority = 2 * static_cast<std::size_t>(std::max(coverage, 0)) > n_annotators;
    if (majority && !open) {
      if (!out.empty() && out.back().end_s == time) {
        open_at = out.back().start_s;
        out.pop_back();
      } else {
        open_at = time;
      }
      open = true;
    } else if (!majority && open) {
      if (time > open_at) out.push_back({open_at, time});
      open = false;
    }
  }
  return out;
}

DatasetStats ComputeDatasetStats(std::span<const AnnotationSet> sets) {
  DatasetStats stats;
  for (const auto& set : sets) {
    const std::string speaker = SpeakerOf(set);
    ++stats.files;
    ++stats.files_per_speaker[speaker];
    stats.total_audio_s += set.duration_s;
    for (const auto& r : MajorityRegions(set)) {
      ++stats.regions;
      ++stats.regions_per_speaker[speaker];
      stats.total_region_s += r.duration();
    }
  }
  if (stats.regions > 0) {
    stats.mean_region_s = stats.total_region_s / static_cast<double>(stats.regions);
  }
  return stats;
}

}  // namespace stresskit::annotation
