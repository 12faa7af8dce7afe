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

#ifndef STRESSKIT_FEATURE_MATRIX_H_
#define STRESSKIT_FEATURE_MATRIX_H_

#include <cstddef>
#include <string>
#include <vector>

#include "stresskit/types.h"

namespace stresskit {

// Per-frame feature rows as they are persisted: 32-bit floats, row-major.
// `column_layout` and `frame_times` describe the matrix when it comes out of
// feature assembly; they are not part of the on-disk format.
struct FeatureMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<float> data;
  std::vector<std::string> column_layout;
  std::vector<double> frame_times;
  std::string config_digest;  // 64 hex digits, or empty

  float at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  Matrix ToMatrix() const {
    Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < data.size(); ++i) m.data()[i] = data[i];
    return m;
  }

  static FeatureMatrix FromMatrix(const Matrix& m, std::string digest = {}) {
    FeatureMatrix f;
    f.rows = static_cast<std::size_t>(m.rows());
    f.cols = static_cast<std::size_t>(m.cols());
    f.data.resize(f.rows * f.cols);
    for (std::size_t i = 0; i < f.data.size(); ++i) {
      f.data[i] = static_cast<float>(m.data()[i]);
    }
    f.config_digest = std::move(digest);
    return f;
  }
};

}  // namespace stresskit

#endif  // STRESSKIT_FEATURE_MATRIX_H_
