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

#include "stresskit/classifier/svc.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <list>
#include <unordered_map>
#include <vector>

#include "stresskit/classifier/neighbors.h"
#include "stresskit/error.h"

namespace stresskit::classifier {
namespace {

constexpr double kTau = 1e-12;

// LRU cache of kernel rows K(x_i, .).
class KernelCache {
 public:
  KernelCache(const Matrix& x, double gamma, std::size_t budget_bytes)
      : x_(x), gamma_(gamma), norms_(x.rowwise().squaredNorm()) {
    const std::size_t row_bytes = sizeof(double) * static_cast<std::size_t>(x.rows());
    capacity_ = std::max<std::size_t>(2, budget_bytes / std::max<std::size_t>(row_bytes, 1));
  }

  const Vector& Row(std::size_t i) {
    auto it = index_.find(i);
    if (it != index_.end()) {
      lru_.splice(lru_.begin(), lru_, it->second);
      return it->second->second;
    }
    if (lru_.size() >= capacity_) {
      index_.erase(lru_.back().first);
      lru_.pop_back();
    }
    const auto r = static_cast<Eigen::Index>(i);
    Vector row = x_ * x_.row(r).transpose();
    row = (-gamma_ * ((norms_.array() + norms_[r]) - 2.0 * row.array()).max(0.0)).exp();
    lru_.emplace_front(i, std::move(row));
    index_[i] = lru_.begin();
    return lru_.front().second;
  }

 private:
  const Matrix& x_;
  double gamma_;
  Vector norms_;
  std::size_t capacity_;
  std::list<std::pair<std::size_t, Vector>> lru_;
  std::unordered_map<std::size_t, std::list<std::pair<std::size_t, Vector>>::iterator> index_;
};

}  // namespace

Vector SvcModel::Decision(const Matrix& x) const {
  if (support_vectors.rows() == 0) return Vector::Constant(x.rows(), -rho);
  const Matrix k = (-gamma * SquaredDistances(x, support_vectors).array()).exp().matrix();
  return (k * coef).array() - rho;
}

SvcModel TrainSvc(const Matrix& x, const Labels& labels, const SvcConfig& cfg) {
  if (!(cfg.penalty_c > 0.0) || !(cfg.tol > 0.0)) {
    throw Error(ErrorCode::kInvalidConfig, "SVC needs positive C and tolerance");
  }
  const auto n = static_cast<std::size_t>(x.rows());
  if (labels.size() != n) throw Error(ErrorCode::kLengthMismatch, "rows and labels differ");
  std::vector<double> y(n);
  bool seen[2] = {false, false};
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i] != 0 && labels[i] != 1) {
      throw Error(ErrorCode::kSchemaError, "SVC labels must be 0 or 1");
    }
    seen[labels[i]] = true;
    y[i] = labels[i] == 1 ? 1.0 : -1.0;
  }
  if (!seen[0] || !seen[1]) throw Error(ErrorCode::kSingleClass, "SVC needs both classes");

  SvcModel model;
  model.gamma = cfg.gamma > 0.0 ? cfg.gamma : ScaleGamma(x);
  const double c = cfg.penalty_c;
  KernelCache cache(x, model.gamma, cfg.cache_mb << 20);

  // K(x, x) = 1 for the RBF kernel.
  std::vector<double> alpha(n, 0.0);
  std::vector<double> grad(n, -1.0);
  auto upper = [&](std::size_t t) { return alpha[t] >= c; };
  auto lower = [&](std::size_t t) { return alpha[t] <= 0.0; };
  const std::size_t max_iter = cfg.max_iter > 0 ? cfg.max_iter : std::max<std::size_t>(10000000, 100 * n);

  std::size_t iter = 0;
  for (; iter < max_iter; ++iter) {
    // Working set selection (maximal violating pair, second-order for j).
    double g_max = -std::numeric_limits<double>::infinity();
    std::size_t i = n;
    for (std::size_t t = 0; t < n; ++t) {
      if (y[t] > 0) {
        if (!upper(t) && -grad[t] >= g_max) {
          g_max = -grad[t];
          i = t;
        }
      } else if (!lower(t) && grad[t] >= g_max) {
        g_max = grad[t];
        i = t;
      }
    }
    if (i == n) break;
    const Vector& k_i = cache.Row(i);

    double g_max2 = -std::numeric_limits<double>::infinity();
    double best_obj = std::numeric_limits<double>::infinity();
    std::size_t j = n;
    for (std::size_t t = 0; t < n; ++t) {
      double grad_diff;
      if (y[t] > 0) {
        if (lower(t)) continue;
        grad_diff = g_max + grad[t];
        g_max2 = std::max(g_max2, grad[t]);
      } else {
        if (upper(t)) continue;
        grad_diff = g_max - grad[t];
        g_max2 = std::max(g_max2, -grad[t]);
      }
      if (grad_diff > 0.0) {
        // K(i,i) + K(t,t) - 2 K(i,t)
        const double quad = 2.0 - 2.0 * k_i[static_cast<Eigen::Index>(t)];
        const double obj = -(grad_diff * grad_diff) / (quad > 0.0 ? quad : kTau);
        if (obj <= best_obj) {
          best_obj = obj;
          j = t;
        }
      }
    }
    if (g_max + g_max2 < cfg.tol || j == n) break;

    const Vector& k_j = cache.Row(j);
    const Vector k_i_copy = cache.Row(i);  // k_j lookup may evict row i
    const double k_ij = k_i_copy[static_cast<Eigen::Index>(j)];
    const double q_ij = y[i] * y[j] * k_ij;
    const double old_i = alpha[i];
    const double old_j = alpha[j];

    if (y[i] != y[j]) {
      double quad = 2.0 + 2.0 * q_ij;
      if (quad <= 0.0) quad = kTau;
      const double delta = (-grad[i] - grad[j]) / quad;
      const double diff = alpha[i] - alpha[j];
      alpha[i] += delta;
      alpha[j] += delta;
      if (diff > 0.0) {
        if (alpha[j] < 0.0) {
          alpha[j] = 0.0;
          alpha[i] = diff;
        }
      } else if (alpha[i] < 0.0) {
        alpha[i] = 0.0;
        alpha[j] = -diff;
      }
      if (diff > 0.0) {
        if (alpha[i] > c) {
          alpha[i] = c;
          alpha[j] = c - diff;
        }
      } else if (alpha[j] > c) {
        alpha[j] = c;
        alpha[i] = c + diff;
      }
    } else {
      double quad = 2.0 - 2.0 * q_ij;
      if (quad <= 0.0) quad = kTau;
      const double delta = (grad[i] - grad[j]) / quad;
      const double sum = alpha[i] + alpha[j];
      alpha[i] -= delta;
      alpha[j] += delta;
      if (sum > c) {
        if (alpha[i] > c) {
          alpha[i] = c;
          alpha[j] = sum - c;
        }
      } else if (alpha[j] < 0.0) {
        alpha[j] = 0.0;
        alpha[i] = sum;
      }
      if (sum > c) {
        if (alpha[j] > c) {
          alpha[j] = c;
          alpha[i] = sum - c;
        }
      } else if (alpha[i] < 0.0) {
        alpha[i] = 0.0;
        alpha[j] = sum;
      }
    }

    const double d_i = alpha[i] - old_i;
    const double d_j = alpha[j] - old_j;
    for (std::size_t t = 0; t < n; ++t) {
      const auto te = static_cast<Eigen::Index>(t);
      grad[t] += y[t] * (y[i] * k_i_copy[te] * d_i + y[j] * k_j[te] * d_j);
    }
  }
  model.iterations = iter;

  // rho from free support vectors, else the midpoint of the feasible range.
  double upper_bound = std::numeric_limits<double>::infinity();
  double lower_bound = -std::numeric_limits<double>::infinity();
  double sum_free = 0.0;
  std::size_t n_free = 0;
  for (std::size_t t = 0; t < n; ++t) {
    const double yg = y[t] * grad[t];
    if (upper(t)) {
      if (y[t] < 0) upper_bound = std::min(upper_bound, yg);
      else lower_bound = std::max(lower_bound, yg);
    } else if (lower(t)) {
      if (y[t] > 0) upper_bound = std::min(upper_bound, yg);
      else lower_bound = std::max(lower_bound, yg);
    } else {
      ++n_free;
      sum_free += yg;
    }
  }
  model.rho = n_free > 0 ? sum_free / static_cast<double>(n_free)
                         : 0.5 * (upper_bound + lower_bound);

  std::vector<std::size_t> sv;
  for (std::size_t t = 0; t < n; ++t) {
    if (alpha[t] > 0.0) sv.push_back(t);
  }
  model.support_vectors.resize(static_cast<Eigen::Index>(sv.size()), x.cols());
  model.coef.resize(static_cast<Eigen::Index>(sv.size()));
  for (std::size_t s = 0; s < sv.size(); ++s) {
    model.support_vectors.row(static_cast<Eigen::Index>(s)) = x.row(static_cast<Eigen::Index>(sv[s]));
    model.coef[static_cast<Eigen::Index>(s)] = alpha[sv[s]] * y[sv[s]];
  }
  return model;
}

}  // namespace stresskit::classifier
