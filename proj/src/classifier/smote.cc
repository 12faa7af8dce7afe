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

#include "stresskit/classifier/smote.h"

#include <cmath>
#include <random>

#include "stresskit/classifier/neighbors.h"
#include "stresskit/error.h"

namespace stresskit::classifier {

void SmoteConfig::Validate() const {
  if (k_neighbors < 1) throw Error(ErrorCode::kInvalidConfig, "SMOTE k_neighbors must be >= 1");
  if (!(target_ratio > 0.0 && target_ratio <= 1.0)) {
    throw Error(ErrorCode::kInvalidConfig, "SMOTE target_ratio must lie in (0, 1]");
  }
}

SmoteResult SmoteOversample(const Matrix& x, const Labels& y, const SmoteConfig& cfg) {
  cfg.Validate();
  if (static_cast<std::size_t>(x.rows()) != y.size()) {
    throw Error(ErrorCode::kLengthMismatch, "feature rows and labels differ in count");
  }
  std::vector<std::size_t> by_class[2];
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] != 0 && y[i] != 1) {
      throw Error(ErrorCode::kSchemaError, "SMOTE labels must be 0 or 1");
    }
    by_class[y[i]].push_back(i);
  }
  if (by_class[0].empty() || by_class[1].empty()) {
    throw Error(ErrorCode::kSingleClass, "SMOTE needs both classes present");
  }

  SmoteResult result{x, y, {}, false, {}};
  const int minority_label = by_class[1].size() < by_class[0].size() ? 1 : 0;
  const auto& minority = by_class[minority_label];
  const std::size_t majority_count = by_class[1 - minority_label].size();
  const auto desired = static_cast<std::size_t>(
      std::llround(cfg.target_ratio * static_cast<double>(majority_count)));
  if (desired <= minority.size()) return result;
  if (minority.size() < 2) {
    result.passthrough = true;
    result.warning = "SMOTE skipped: only one minority sample";
    return result;
  }
  const std::size_t n_synthetic = desired - minority.size();
  const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(cfg.k_neighbors),
                                              minority.size() - 1);

  Matrix minority_rows(static_cast<Eigen::Index>(minority.size()), x.cols());
  for (std::size_t i = 0; i < minority.size(); ++i) {
    minority_rows.row(static_cast<Eigen::Index>(i)) = x.row(static_cast<Eigen::Index>(minority[i]));
  }
  const auto neighbors = NearestNeighbors(minority_rows, minority_rows, k, true);

  std::mt19937_64 rng(cfg.rng_seed);
  std::uniform_int_distribution<std::size_t> pick_base(0, minority.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_neighbor(0, k - 1);
  std::uniform_real_distribution<double> pick_u(0.0, 1.0);

  const Eigen::Index n0 = x.rows();
  result.x.conservativeResize(n0 + static_cast<Eigen::Index>(n_synthetic), Eigen::NoChange);
  result.y.resize(y.size() + n_synthetic, minority_label);
  result.origins.reserve(n_synthetic);
  for (std::size_t s = 0; s < n_synthetic; ++s) {
    const std::size_t a = pick_base(rng);
    const std::size_t b = neighbors[a][pick_neighbor(rng)].index;
    const double u = pick_u(rng);
    const auto ra = static_cast<Eigen::Index>(minority[a]);
    const auto rb = static_cast<Eigen::Index>(minority[b]);
    result.x.row(n0 + static_cast<Eigen::Index>(s)) = x.row(ra) + u * (x.row(rb) - x.row(ra));
    result.origins.push_back({minority[a], minority[b], u});
  }
  return result;
}

}  // namespace stresskit::classifier
