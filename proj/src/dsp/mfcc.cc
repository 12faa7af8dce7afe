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

#include "stresskit/dsp/mfcc.h"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

#include "stresskit/error.h"

namespace stresskit::dsp {
namespace {

// FFTW's planner is not re-entrant.
std::mutex& PlannerMutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

void MfccConfig::Validate(int sample_rate) const {
  if (n_coeffs < 1 || n_mels < 1 || n_coeffs > n_mels) {
    throw Error(ErrorCode::kInvalidConfig, "MFCC config needs 1 <= n_coeffs <= n_mels");
  }
  if (!(fmin >= 0.0 && fmin < fmax && fmax <= 0.5 * sample_rate)) {
    throw Error(ErrorCode::kInvalidConfig,
                "MFCC config needs 0 <= fmin < fmax <= sample_rate/2");
  }
  if (!(log_floor > 0.0)) {
    throw Error(ErrorCode::kInvalidConfig, "MFCC log floor must be positive");
  }
}

double HzToMel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
double MelToHz(double mel) { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); }

Matrix MelFilterbank(const FrameConfig& frame_cfg, const MfccConfig& mfcc_cfg) {
  const int n_bins = frame_cfg.frame_len / 2 + 1;
  const double mel_lo = HzToMel(mfcc_cfg.fmin);
  const double mel_hi = HzToMel(mfcc_cfg.fmax);
  std::vector<double> edges(static_cast<std::size_t>(mfcc_cfg.n_mels) + 2);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    edges[i] = MelToHz(mel_lo + (mel_hi - mel_lo) * static_cast<double>(i) /
                                    static_cast<double>(mfcc_cfg.n_mels + 1));
  }
  Matrix fb = Matrix::Zero(mfcc_cfg.n_mels, n_bins);
  for (int m = 0; m < mfcc_cfg.n_mels; ++m) {
    const double left = edges[m];
    const double center = edges[m + 1];
    const double right = edges[m + 2];
    for (int k = 0; k < n_bins; ++k) {
      const double f = static_cast<double>(k) * frame_cfg.sample_rate / frame_cfg.frame_len;
      double w = 0.0;
      if (f > left && f <= center) {
        w = (f - left) / (center - left);
      } else if (f > center && f < right) {
        w = (right - f) / (right - center);
      }
      fb(m, k) = w;
    }
  }
  return fb;
}

struct MfccExtractor::Plan {
  fftw_plan plan = nullptr;
  int n = 0;
};

MfccExtractor::MfccExtractor(const FrameConfig& frame_cfg, const MfccConfig& mfcc_cfg)
    : frame_cfg_(frame_cfg), mfcc_cfg_(mfcc_cfg), plan_(std::make_unique<Plan>()) {
  frame_cfg_.Validate();
  mfcc_cfg_.Validate(frame_cfg_.sample_rate);
  const int n = frame_cfg_.frame_len;

  // Periodic Hann.
  window_.resize(n);
  for (int i = 0; i < n; ++i) {
    window_[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / n);
  }
  filterbank_ = MelFilterbank(frame_cfg_, mfcc_cfg_);

  const int m = mfcc_cfg_.n_mels;
  dct_.resize(mfcc_cfg_.n_coeffs, m);
  for (int k = 0; k < mfcc_cfg_.n_coeffs; ++k) {
    const double scale = std::sqrt((k == 0 ? 1.0 : 2.0) / m);
    for (int j = 0; j < m; ++j) {
      dct_(k, j) = scale * std::cos(std::numbers::pi * k * (j + 0.5) / m);
    }
  }

  std::lock_guard<std::mutex> lock(PlannerMutex());
  double* in = fftw_alloc_real(static_cast<std::size_t>(n));
  fftw_complex* out = fftw_alloc_complex(static_cast<std::size_t>(n / 2 + 1));
  plan_->n = n;
  plan_->plan = fftw_plan_dft_r2c_1d(n, in, out, FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(in);
  fftw_free(out);
  if (plan_->plan == nullptr) {
    throw Error(ErrorCode::kInvalidConfig, "cannot plan FFT of size " + std::to_string(n));
  }
}

MfccExtractor::~MfccExtractor() {
  if (plan_ && plan_->plan != nullptr) {
    std::lock_guard<std::mutex> lock(PlannerMutex());
    fftw_destroy_plan(plan_->plan);
  }
}

Matrix MfccExtractor::Compute(const Matrix& frames) const {
  const int n = frame_cfg_.frame_len;
  if (frames.cols() != n) {
    throw Error(ErrorCode::kInvalidConfig,
                "frames have " + std::to_string(frames.cols()) + " samples, expected " +
                    std::to_string(n));
  }
  const int n_bins = n / 2 + 1;
  std::vector<double> in(static_cast<std::size_t>(n));
  std::vector<fftw_complex> out(static_cast<std::size_t>(n_bins));
  Vector magnitude(n_bins);
  Matrix mfcc(frames.rows(), mfcc_cfg_.n_coeffs);
  for (Eigen::Index t = 0; t < frames.rows(); ++t) {
    for (int i = 0; i < n; ++i) in[i] = frames(t, i) * window_[i];
    fftw_execute_dft_r2c(plan_->plan, in.data(), out.data());
    for (int k = 0; k < n_bins; ++k) magnitude[k] = std::hypot(out[k][0], out[k][1]);
    Vector mel = filterbank_ * magnitude;
    for (Eigen::Index j = 0; j < mel.size(); ++j) {
      mel[j] = std::log(std::max(mel[j], mfcc_cfg_.log_floor));
    }
    mfcc.row(t) = (dct_ * mel).transpose();
  }
  return mfcc;
}

Matrix ComputeMfcc(const Matrix& frames, const FrameConfig& frame_cfg,
                   const MfccConfig& mfcc_cfg) {
  return MfccExtractor(frame_cfg, mfcc_cfg).Compute(frames);
}

}  // namespace stresskit::dsp
