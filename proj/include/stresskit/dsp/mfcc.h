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

#ifndef STRESSKIT_DSP_MFCC_H_
#define STRESSKIT_DSP_MFCC_H_

#include <memory>

#include "stresskit/dsp/framing.h"
#include "stresskit/types.h"

namespace stresskit::dsp {

struct MfccConfig {
  int n_coeffs = 13;
  int n_mels = 40;
  double fmin = 0.0;
  double fmax = 8000.0;
  double log_floor = 1e-10;

  void Validate(int sample_rate) const;
  bool operator==(const MfccConfig&) const = default;
};

double HzToMel(double hz);
double MelToHz(double mel);

// Triangular HTK-mel filters evaluated at the rfft bin frequencies
// k * sample_rate / frame_len; shape n_mels x (frame_len/2 + 1).
Matrix MelFilterbank(const FrameConfig& frame_cfg, const MfccConfig& mfcc_cfg);

// Hann window -> |rfft| -> mel filterbank -> log(max(., floor)) ->
// orthonormal DCT-II, first n_coeffs kept. The FFT plan and filterbank are
// built once per extractor; Compute is const and thread-safe.
class MfccExtractor {
 public:
  MfccExtractor(const FrameConfig& frame_cfg, const MfccConfig& mfcc_cfg);
  ~MfccExtractor();
  MfccExtractor(const MfccExtractor&) = delete;
  MfccExtractor& operator=(const MfccExtractor&) = delete;

  Matrix Compute(const Matrix& frames) const;

 private:
  struct Plan;
  FrameConfig frame_cfg_;
  MfccConfig mfcc_cfg_;
  Vector window_;
  Matrix filterbank_;
  Matrix dct_;  // n_coeffs x n_mels
  std::unique_ptr<Plan> plan_;
};

Matrix ComputeMfcc(const Matrix& frames, const FrameConfig& frame_cfg,
                   const MfccConfig& mfcc_cfg);

}  // namespace stresskit::dsp

#endif  // STRESSKIT_DSP_MFCC_H_
