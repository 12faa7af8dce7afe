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

#include "stresskit/dsp/sdc.h"

#include <algorithm>
#include <string>

#include "stresskit/error.h"

namespace stresskit::dsp {

void SdcConfig::Validate() const {
  if (d < 1 || p < 1 || k < 1 || n_base < 1) {
    throw Error(ErrorCode::kInvalidConfig, "SDC config needs d, p, k, n_base >= 1");
  }
}

Matrix ComputeSdc(const Matrix& mfcc, const SdcConfig& cfg) {
  cfg.Validate();
  if (mfcc.cols() != cfg.n_base) {
    throw Error(ErrorCode::kInvalidConfig,
                "SDC expects " + std::to_string(cfg.n_base) + " base coefficients, got " +
                    std::to_string(mfcc.cols()));
  }
  const Eigen::Index n = mfcc.rows();
  Matrix sdc = Matrix::Zero(n, cfg.Width());
  if (n == 0) return sdc;
  auto clamp = [n](Eigen::Index i) { return std::clamp<Eigen::Index>(i, 0, n - 1); };
  for (Eigen::Index t = 0; t < n; ++t) {
    for (int i = 0; i < cfg.k; ++i) {
      const Eigen::Index shift = t + static_cast<Eigen::Index>(i) * cfg.p;
      sdc.block(t, static_cast<Eigen::Index>(i) * cfg.n_base, 1, cfg.n_base) =
          mfcc.row(clamp(shift + cfg.d)) - mfcc.row(clamp(shift - cfg.d));
    }
  }
  return sdc;
}

}  // namespace stresskit::dsp
