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

#ifndef STRESSKIT_CLASSIFIER_NEIGHBORS_H_
#define STRESSKIT_CLASSIFIER_NEIGHBORS_H_

#include <cstddef>
#include <vector>

#include "stresskit/types.h"

namespace stresskit::classifier {

// Squared Euclidean distances between every row of `a` and every row of `b`,
// clamped at zero.
Matrix SquaredDistances(const Matrix& a, const Matrix& b);

struct Neighbor {
  std::size_t index;
  double sq_dist;
};

// The k nearest rows of `reference` for each row of `query`, ascending by
// distance with ties broken by index. With `exclude_self` the query rows are
// taken to be the reference rows and row i never lists itself.
std::vector<std::vector<Neighbor>> NearestNeighbors(const Matrix& query,
                                                    const Matrix& reference, std::size_t k,
                                                    bool exclude_self = false);

// "scale" rule: 1 / (n_features * var(all entries)).
// Falls back to 1.0 for a constant matrix.
double ScaleGamma(const Matrix& x);

}  // namespace stresskit::classifier

#endif  // STRESSKIT_CLASSIFIER_NEIGHBORS_H_
