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

#include "stresskit/dsp/pitch.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "stresskit/error.h"

namespace stresskit::dsp {
namespace {

// Mean-square level below which a frame is treated as silence.
constexpr double kSilenceFloor = 1e-10;

// Among local maxima reaching this fraction of the best peak, the shortest
// lag wins; this suppresses period-doubling on strongly periodic frames.
constexpr double kOctaveTolerance = 0.9;

}  // namespace

void PitchConfig::Validate(int sample_rate) const {
  if (!(f0_min > 0.0 && f0_min < f0_max && f0_max < 0.5 * sample_rate)) {
    throw Error(ErrorCode::kInvalidConfig,
                "pitch config needs 0 < f0_min < f0_max < sample_rate/2");
  }
  if (!(voicing_threshold > 0.0 && voicing_threshold < 1.0)) {
    throw Error(ErrorCode::kInvalidConfig, "voicing_threshold must lie in (0, 1)");
  }
}

double EstimateFrameF0(std::span<const double> frame, int sample_rate,
                       const PitchConfig& cfg) {
  const std::size_t n = frame.size();
  if (n < 4) return 0.0;

  double mean = 0.0;
  for (double v : frame) mean += v;
  mean /= static_cast<double>(n);
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = frame[i] - mean;

  // prefix[i] = sum of x[0..i)^2
  std::vector<double> prefix(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + x[i] * x[i];
  if (prefix[n] < kSilenceFloor * static_cast<double>(n)) return 0.0;

  const auto lag_min = static_cast<std::size_t>(
      std::max(1.0, std::floor(sample_rate / cfg.f0_max)));
  const auto lag_max = std::min(static_cast<std::size_t>(std::ceil(sample_rate / cfg.f0_min)),
                                n / 2);
  if (lag_min + 2 > lag_max) return 0.0;

  // r[lag - lag_min] is the normalized autocorrelation at that lag; one extra
  // lag on each side for interpolation at the search edges.
  const std::size_t lo = lag_min - 1;
  const std::size_t hi = lag_max + 1;
  std::vector<double> r(hi - lo + 1, 0.0);
  for (std::size_t lag = std::max<std::size_t>(lo, 1); lag <= hi; ++lag) {
    const std::size_t m = n - lag;
    double cross = 0.0;
    for (std::size_t i = 0; i < m; ++i) cross += x[i] * x[i + lag];
    const double head = prefix[m];
    const double tail = prefix[n] - prefix[lag];
    const double denom = std::sqrt(head * tail);
    r[lag - lo] = denom > 0.0 ? cross / denom : 0.0;
  }
  auto at = [&](std::size_t lag) { return r[lag - lo]; };

  double best = -1.0;
  for (std::size_t lag = lag_min; lag <= lag_max; ++lag) best = std::max(best, at(lag));
  if (best < cfg.voicing_threshold) return 0.0;

  std::size_t chosen = 0;
  for (std::size_t lag = lag_min; lag <= lag_max; ++lag) {
    const double v = at(lag);
    if (v >= kOctaveTolerance * best && v >= at(lag - 1) && v >= at(lag + 1)) {
      chosen = lag;
      break;
    }
  }
  if (chosen == 0) {
    // Best value sits on a monotone edge of the search range.
    for (std::size_t lag = lag_min; lag <= lag_max; ++lag) {
      if (at(lag) == best) {
        chosen = lag;
        break;
      }
    }
  }

  // Parabolic refinement of the peak position.
  const double left = at(chosen - 1);
  const double mid = at(chosen);
  const double right = at(chosen + 1);
  const double curvature = left - 2.0 * mid + right;
  double period = static_cast<double>(chosen);
  if (curvature < 0.0) {
    period += std::clamp(0.5 * (left - right) / curvature, -0.5, 0.5);
  }
  return std::clamp(sample_rate / period, cfg.f0_min, cfg.f0_max);
}

std::vector<double> EstimateF0(const Matrix& frames, const FrameConfig& frame_cfg,
                               const PitchConfig& pitch_cfg) {
  pitch_cfg.Validate(frame_cfg.sample_rate);
  std::vector<double> f0(static_cast<std::size_t>(frames.rows()), 0.0);
  for (Eigen::Index t = 0; t < frames.rows(); ++t) {
    f0[static_cast<std::size_t>(t)] = EstimateFrameF0(
        std::span<const double>(frames.row(t).data(), static_cast<std::size_t>(frames.cols())),
        frame_cfg.sample_rate, pitch_cfg);
  }
  return f0;
}

std::vector<double> EstimateF0(const AudioBuffer& audio, const FrameConfig& frame_cfg,
                               const PitchConfig& pitch_cfg) {
  return EstimateF0(FrameSignal(audio, frame_cfg), frame_cfg, pitch_cfg);
}

}  // namespace stresskit::dsp
