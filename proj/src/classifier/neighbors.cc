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

#include "stresskit/classifier/neighbors.h"

#include <algorithm>

namespace stresskit::classifier {
namespace {

constexpr Eigen::Index kBlockRows = 256;

}  // namespace

Matrix SquaredDistances(const Matrix& a, const Matrix& b) {
  const Vector a_norms = a.rowwise().squaredNorm();
  const Vector b_norms = b.rowwise().squaredNorm();
  Matrix d = -2.0 * (a * b.transpose());
  d.colwise() += a_norms;
  d.rowwise() += b_norms.transpose();
  return d.cwiseMax(0.0);
}

std::vector<std::vector<Neighbor>> NearestNeighbors(const Matrix& query,
                                                    const Matrix& reference, std::size_t k,
                                                    bool exclude_self) {
  const auto n_ref = static_cast<std::size_t>(reference.rows());
  const std::size_t usable = exclude_self && n_ref > 0 ? n_ref - 1 : n_ref;
  k = std::min(k, usable);
  std::vector<std::vector<Neighbor>> out(static_cast<std::size_t>(query.rows()));
  std::vector<Neighbor> candidates;
  for (Eigen::Index begin = 0; begin < query.rows(); begin += kBlockRows) {
    const Eigen::Index rows = std::min(kBlockRows, query.rows() - begin);
    const Matrix d = SquaredDistances(query.middleRows(begin, rows), reference);
    for (Eigen::Index r = 0; r < rows; ++r) {
      const auto qi = static_cast<std::size_t>(begin + r);
      candidates.clear();
      for (std::size_t j = 0; j < n_ref; ++j) {
        if (exclude_self && j == qi) continue;
        candidates.push_back({j, d(r, static_cast<Eigen::Index>(j))});
      }
      auto less = [](const Neighbor& x, const Neighbor& y) {
        return x.sq_dist < y.sq_dist || (x.sq_dist == y.sq_dist && x.index < y.index);
      };
      std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(k),
                        candidates.end(), less);
      out[qi].assign(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(k));
    }
  }
  return out;
}

double ScaleGamma(const Matrix& x) {
  if (x.size() == 0) return 1.0;
  const double mean = x.mean();
  const double var = (x.array() - mean).square().mean();
  return var > 0.0 ? 1.0 / (static_cast<double>(x.cols()) * var) : 1.0;
}

}  // namespace stresskit::classifier
