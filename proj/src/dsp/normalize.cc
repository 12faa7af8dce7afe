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

#include "stresskit/dsp/normalize.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "stresskit/error.h"

namespace stresskit::dsp {

Matrix NormStats::Apply(const Matrix& m) const {
  if (static_cast<std::size_t>(m.cols()) != mean.size()) {
    throw Error(ErrorCode::kLayoutMismatch,
                "normalization stats cover " + std::to_string(mean.size()) +
                    " columns, matrix has " + std::to_string(m.cols()));
  }
  Matrix out(m.rows(), m.cols());
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    const double mu = mean[static_cast<std::size_t>(c)];
    const double sd = stddev[static_cast<std::size_t>(c)];
    if (sd > 0.0) {
      out.col(c) = (m.col(c).array() - mu) / sd;
    } else {
      out.col(c).setZero();
    }
  }
  return out;
}

NormStats FitNormStats(const Matrix& m) {
  const auto cols = static_cast<std::size_t>(m.cols());
  NormStats stats{std::vector<double>(cols, 0.0), std::vector<double>(cols, 0.0)};
  const auto n = static_cast<double>(m.rows());
  if (m.rows() == 0) return stats;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    const double mu = m.col(c).sum() / n;
    const double var = (m.col(c).array() - mu).square().sum() / n;
    stats.mean[static_cast<std::size_t>(c)] = mu;
    // Rounding leaves ~ulp-sized variance on constant columns.
    const bool constant = var <= 1e-24 * std::max(1.0, mu * mu);
    stats.stddev[static_cast<std::size_t>(c)] = constant ? 0.0 : std::sqrt(var);
  }
  return stats;
}

Normalized MeanVarianceNormalize(const Matrix& m) {
  Normalized out;
  out.stats = FitNormStats(m);
  out.values = out.stats.Apply(m);
  return out;
}

Matrix StackContext(const Matrix& m, int window) {
  if (window < 1 || window % 2 == 0) {
    throw Error(ErrorCode::kWindowEven,
                "context window must be a positive odd count, got " + std::to_string(window));
  }
  const Eigen::Index n = m.rows();
  const Eigen::Index width = m.cols();
  const int half = (window - 1) / 2;
  Matrix out(n, width * window);
  for (Eigen::Index t = 0; t < n; ++t) {
    for (int o = -half; o <= half; ++o) {
      const Eigen::Index src = std::clamp<Eigen::Index>(t + o, 0, n - 1);
      out.block(t, (o + half) * width, 1, width) = m.row(src);
    }
  }
  return out;
}

}  // namespace stresskit::dsp
