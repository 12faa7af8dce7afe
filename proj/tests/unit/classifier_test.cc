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

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "stresskit/classifier/label_propagation.h"
#include "stresskit/classifier/metrics.h"
#include "stresskit/classifier/model.h"
#include "stresskit/classifier/neighbors.h"
#include "stresskit/classifier/random_forest.h"
#include "stresskit/classifier/smote.h"
#include "stresskit/classifier/split.h"
#include "stresskit/classifier/svc.h"
#include "test_util.h"

namespace stresskit::classifier {
namespace {

struct Blobs {
  Matrix x_train, x_test;
  Labels y_train, y_test;
};

// Two isotropic unit-variance blobs whose centers are 10 apart.
Blobs MakeBlobs(int dims, int n_train, int n_test, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  const double offset = 10.0 / std::sqrt(static_cast<double>(dims));
  Blobs b;
  auto fill = [&](Matrix& x, Labels& y, int per_class) {
    x.resize(2 * per_class, dims);
    for (int i = 0; i < 2 * per_class; ++i) {
      const int label = i % 2;
      for (int d = 0; d < dims; ++d) x(i, d) = g(rng) + (label == 1 ? offset : 0.0);
      y.push_back(label);
    }
  };
  fill(b.x_train, b.y_train, n_train);
  fill(b.x_test, b.y_test, n_test);
  return b;
}

double Accuracy(const Labels& a, const Labels& b) { return Evaluate(a, b).accuracy; }

TEST_CASE("nearest neighbors agree with brute force") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix ref(40, 3), query(10, 3);
  for (Eigen::Index i = 0; i < ref.size(); ++i) ref.data()[i] = u(rng);
  for (Eigen::Index i = 0; i < query.size(); ++i) query.data()[i] = u(rng);
  const auto nn = NearestNeighbors(query, ref, 5);
  for (Eigen::Index q = 0; q < query.rows(); ++q) {
    std::vector<std::pair<double, std::size_t>> all;
    for (Eigen::Index r = 0; r < ref.rows(); ++r) {
      all.push_back({(query.row(q) - ref.row(r)).squaredNorm(), static_cast<std::size_t>(r)});
    }
    std::sort(all.begin(), all.end());
    for (std::size_t k = 0; k < 5; ++k) {
      CHECK(nn[static_cast<std::size_t>(q)][k].index == all[k].second);
      CHECK(nn[static_cast<std::size_t>(q)][k].sq_dist == doctest::Approx(all[k].first));
    }
  }
  const auto self = NearestNeighbors(ref, ref, 3, true);
  for (std::size_t i = 0; i < self.size(); ++i) {
    for (const auto& n : self[i]) CHECK(n.index != i);
  }
}

TEST_CASE("SMOTE on the two-point minority lands on the segment") {
  Matrix x(6, 2);
  x << 0, 0, 1, 1, 5, 5, 6, 5, 5, 6, 6, 6;
  const Labels y{1, 1, 0, 0, 0, 0};
  SmoteConfig cfg;
  cfg.rng_seed = 3;
  const SmoteResult r = SmoteOversample(x, y, cfg);
  REQUIRE(r.x.rows() == 8);
  CHECK(r.x.topRows(6) == x);
  CHECK(std::count(r.y.begin(), r.y.end(), 1) == 4);
  for (Eigen::Index i = 6; i < 8; ++i) {
    CHECK(r.x(i, 0) == doctest::Approx(r.x(i, 1)));
    CHECK(r.x(i, 0) >= 0.0);
    CHECK(r.x(i, 0) <= 1.0);
  }
}

TEST_CASE("SMOTE properties on random data") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> g(0.0, 1.0);
  for (double ratio : {1.0, 0.6}) {
    Matrix x(130, 4);
    Labels y;
    for (Eigen::Index i = 0; i < 130; ++i) {
      for (int d = 0; d < 4; ++d) x(i, d) = g(rng);
      y.push_back(i < 30 ? 1 : 0);
    }
    SmoteConfig cfg;
    cfg.target_ratio = ratio;
    cfg.rng_seed = 99;
    const SmoteResult r = SmoteOversample(x, y, cfg);
    const auto minority = std::count(r.y.begin(), r.y.end(), 1);
    CHECK(std::abs(static_cast<double>(minority) - ratio * 100.0) <= 1.0);
    REQUIRE(r.origins.size() == static_cast<std::size_t>(r.x.rows() - 130));
    for (std::size_t s = 0; s < r.origins.size(); ++s) {
      const auto& o = r.origins[s];
      CHECK(y[o.base] == 1);
      CHECK(y[o.neighbor] == 1);
      CHECK(o.u >= 0.0);
      CHECK(o.u < 1.0);
      const Eigen::RowVectorXd expect =
          x.row(static_cast<Eigen::Index>(o.base)) +
          o.u * (x.row(static_cast<Eigen::Index>(o.neighbor)) - x.row(static_cast<Eigen::Index>(o.base)));
      CHECK((r.x.row(130 + static_cast<Eigen::Index>(s)) - expect).cwiseAbs().maxCoeff() < 1e-9);
    }
    const SmoteResult again = SmoteOversample(x, y, cfg);
    CHECK(again.x == r.x);
    CHECK(again.y == r.y);
  }
}

TEST_CASE("SMOTE edge cases") {
  Matrix x(4, 1);
  x << 0, 1, 2, 3;
  SmoteConfig cfg;
  const SmoteResult balanced = SmoteOversample(x, {0, 1, 0, 1}, cfg);
  CHECK(balanced.x == x);
  CHECK(balanced.origins.empty());
  const SmoteResult lone = SmoteOversample(x, {1, 0, 0, 0}, cfg);
  CHECK(lone.passthrough);
  CHECK_FALSE(lone.warning.empty());
  CHECK(lone.x == x);
  CHECK_ERROR_CODE(SmoteOversample(x, {0, 0, 0, 0}, cfg), ErrorCode::kSingleClass);
  cfg.k_neighbors = 0;
  CHECK_ERROR_CODE(SmoteOversample(x, {0, 1, 0, 1}, cfg), ErrorCode::kInvalidConfig);
}

TEST_CASE("each family separates Gaussian blobs") {
  const Blobs b = MakeBlobs(5, 200, 100, 4);
  SUBCASE("svc") {
    const SvcModel m = TrainSvc(b.x_train, b.y_train, SvcConfig{});
    const Vector f = m.Decision(b.x_test);
    Labels pred;
    for (Eigen::Index i = 0; i < f.size(); ++i) pred.push_back(f[i] >= 0 ? 1 : 0);
    CHECK(Accuracy(pred, b.y_test) >= 0.95);
    CHECK(m.support_vectors.rows() > 0);
  }
  SUBCASE("rfc") {
    ForestConfig cfg;
    cfg.rng_seed = 5;
    const ForestModel m = TrainForest(b.x_train, b.y_train, cfg);
    CHECK(m.trees.size() == 100);
    const Vector s = m.Score(b.x_test);
    Labels pred;
    for (Eigen::Index i = 0; i < s.size(); ++i) pred.push_back(s[i] >= 0.5 ? 1 : 0);
    CHECK(Accuracy(pred, b.y_test) >= 0.95);
    CHECK(TrainForest(b.x_train, b.y_train, cfg) == m);
    // Blob-1 center point, far from the boundary.
    Matrix deep = Matrix::Constant(1, 5, 10.0 / std::sqrt(5.0));
    CHECK(m.Score(deep)[0] >= 0.9);
  }
  SUBCASE("lpa") {
    const LpaModel m = TrainLabelPropagation(b.x_train, b.y_train, LpaConfig{});
    const Vector s = m.Score(b.x_test);
    Labels pred;
    for (Eigen::Index i = 0; i < s.size(); ++i) pred.push_back(s[i] >= 0.5 ? 1 : 0);
    CHECK(Accuracy(pred, b.y_test) >= 0.95);
  }
}

TEST_CASE("SVC solves a tiny separable problem") {
  Matrix x(4, 1);
  x << -2, -1, 1, 2;
  SvcConfig cfg;
  cfg.penalty_c = 10.0;
  cfg.gamma = 0.5;
  const SvcModel m = TrainSvc(x, {0, 0, 1, 1}, cfg);
  const Vector f = m.Decision(x);
  CHECK(f[0] < 0);
  CHECK(f[1] < 0);
  CHECK(f[2] > 0);
  CHECK(f[3] > 0);
  // Symmetric data gives a symmetric decision function.
  CHECK(std::abs(f[1] + f[2]) < 1e-3);
  CHECK(std::abs(m.coef.sum()) < 1e-9);
}

TEST_CASE("label propagation spreads labels through clusters") {
  const Blobs b = MakeBlobs(2, 60, 1, 9);
  Labels y = b.y_train;
  for (std::size_t i = 4; i < y.size(); ++i) y[i] = -1;  // keep two labels per class
  const LpaModel m = TrainLabelPropagation(b.x_train, y, LpaConfig{});
  int correct = 0;
  for (std::size_t i = 4; i < y.size(); ++i) {
    correct += (m.positive_prob[static_cast<Eigen::Index>(i)] >= 0.5) == (b.y_train[i] == 1);
  }
  CHECK(correct >= static_cast<int>(0.95 * (y.size() - 4)));
  for (Eigen::Index i = 0; i < m.positive_prob.size(); ++i) {
    CHECK(m.positive_prob[i] >= 0.0);
    CHECK(m.positive_prob[i] <= 1.0);
  }
  LpaConfig dense;
  dense.kernel = LpaKernel::kRbf;
  const LpaModel md = TrainLabelPropagation(b.x_train, y, dense);
  CHECK(md.Score(b.x_test).size() == b.x_test.rows());
}

TEST_CASE("label propagation with no unlabeled rows reproduces the labels") {
  const Blobs b = MakeBlobs(3, 30, 1, 2);
  const LpaModel m = TrainLabelPropagation(b.x_train, b.y_train, LpaConfig{});
  for (std::size_t i = 0; i < b.y_train.size(); ++i) {
    CHECK(m.positive_prob[static_cast<Eigen::Index>(i)] == b.y_train[i]);
  }
  CHECK_ERROR_CODE(TrainLabelPropagation(b.x_train.topRows(7), Labels(b.y_train.begin(), b.y_train.begin() + 7),
                                         LpaConfig{}),
                   ErrorCode::kUnderdetermined);
}

TEST_CASE("metrics hand-computed cases") {
  const Metrics m = Evaluate({1, 0, 0, 0}, {1, 1, 0, 0});
  CHECK(m.accuracy == 0.75);
  CHECK(m.precision == 1.0);
  CHECK(m.recall == 0.5);
  CHECK(m.f1 == doctest::Approx(2.0 / 3.0));
  CHECK(Evaluate({0, 0, 0, 0}, {1, 0, 1, 0}).f1 == 0.0);
  const Metrics same = Evaluate({1, 0, 1}, {1, 0, 1});
  CHECK(same.accuracy == 1.0);
  CHECK(same.f1 == 1.0);
  CHECK_ERROR_CODE(Evaluate({1}, {1, 0}), ErrorCode::kLengthMismatch);
  CHECK_ERROR_CODE(Evaluate({}, {}), ErrorCode::kEmpty);
}

TEST_CASE("metrics agree with the defining formulas on random confusion tables") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    Confusion c{rng() % 20, rng() % 20, rng() % 20, rng() % 20};
    if (c.total() == 0) continue;
    const Metrics m = MetricsFromConfusion(c);
    const double tp = c.tp, fp = c.fp, tn = c.tn, fn = c.fn;
    CHECK(m.accuracy == doctest::Approx((tp + tn) / (tp + fp + tn + fn)));
    CHECK(m.accuracy + (fp + fn) / c.total() == doctest::Approx(1.0));
    if (c.tp > 0) {
      const double p = tp / (tp + fp), r = tp / (tp + fn);
      CHECK(m.f1 == doctest::Approx(2 * p * r / (p + r)));
      CHECK(m.f1 <= std::max(p, r) + 1e-12);
    } else if (c.fp + c.fn > 0) {
      CHECK(m.f1 == 0.0);
    }
    CHECK(m.f1 >= 0.0);
    CHECK(m.f1 <= 1.0);
  }
}

TEST_CASE("speaker-disjoint split") {
  std::vector<std::string> speakers;
  for (int i = 0; i < 50; ++i) speakers.push_back("s" + std::to_string(i % 5));
  const SplitIndices s = SpeakerDisjointSplit(speakers, 0.8, 1);
  CHECK(s.train.size() + s.test.size() == 50);
  std::set<std::string> train_spk, test_spk;
  for (auto i : s.train) train_spk.insert(speakers[i]);
  for (auto i : s.test) test_spk.insert(speakers[i]);
  CHECK(train_spk.size() == 4);
  CHECK(test_spk.size() == 1);
  for (const auto& t : test_spk) CHECK_FALSE(train_spk.contains(t));
  const SplitIndices again = SpeakerDisjointSplit(speakers, 0.8, 1);
  CHECK(again.train == s.train);
}

TEST_CASE("model train, predict and persistence") {
  const Blobs b = MakeBlobs(4, 60, 30, 6);
  for (ModelFamily family : {ModelFamily::kSvc, ModelFamily::kRfc, ModelFamily::kLpa}) {
    CAPTURE(std::string(ModelFamilyName(family)));
    TrainConfig cfg;
    cfg.model.family = family;
    cfg.model.rfc.n_trees = 20;
    cfg.smote = SmoteConfig{};
    cfg.feature_digest = std::string(64, 'a');
    const StressModel m = Train(b.x_train, b.y_train, cfg);
    const Prediction p = PredictMatrix(m, b.x_test);
    CHECK(Accuracy(p.labels, b.y_test) >= 0.95);
    for (std::size_t i = 0; i < p.scores.size(); ++i) {
      CHECK(p.scores[i] >= 0.0);
      CHECK(p.scores[i] <= 1.0);
      CHECK(p.labels[i] == (p.scores[i] >= 0.5 ? 1 : 0));
    }

    const StressModel back = ParseModel(SerializeModel(m));
    CHECK(back.family == family);
    CHECK(back.params.index() == m.params.index());
    CHECK(PredictMatrix(back, b.x_test).scores == p.scores);
    CHECK(SerializeModel(back) == SerializeModel(m));
    CHECK(SerializeModel(Train(b.x_train, b.y_train, cfg)) == SerializeModel(m));

    const FeatureMatrix fm = FeatureMatrix::FromMatrix(b.x_test, std::string(64, 'b'));
    CHECK_ERROR_CODE(Predict(m, fm), ErrorCode::kLayoutMismatch);
    CHECK(Predict(m, FeatureMatrix::FromMatrix(Matrix(0, 4), cfg.feature_digest)).labels.empty());
  }
}

TEST_CASE("model errors") {
  const Blobs b = MakeBlobs(2, 10, 1, 1);
  CHECK_ERROR_CODE(Train(b.x_train, Labels(b.x_train.rows(), 1), TrainConfig{}), ErrorCode::kSingleClass);
  Matrix bad = b.x_train;
  bad(0, 0) = std::nan("");
  CHECK_ERROR_CODE(Train(bad, b.y_train, TrainConfig{}), ErrorCode::kNonFinite);
  CHECK_ERROR_CODE(Train(b.x_train, Labels{0, 1}, TrainConfig{}), ErrorCode::kLengthMismatch);
  CHECK_ERROR_CODE(ParseModel("{\"format_version\": 2}"), ErrorCode::kVersionMismatch);
  CHECK_ERROR_CODE(ParseModel("\x01garbage"), ErrorCode::kVersionMismatch);
  CHECK_ERROR_CODE(ParseModel("{\"format_version\": 1, \"family\": \"svc\"}"), ErrorCode::kSchemaError);
  CHECK_ERROR_CODE(ParseModelFamily("knn"), ErrorCode::kInvalidConfig);

  TrainConfig cfg;
  cfg.model.family = ModelFamily::kSvc;
  const StressModel m = Train(b.x_train, b.y_train, cfg);
  CHECK(ParseModel(SerializeModel(m)).family == ModelFamily::kSvc);
  CHECK(std::holds_alternative<SvcModel>(ParseModel(SerializeModel(m)).params));
  CHECK_ERROR_CODE(PredictMatrix(m, Matrix::Zero(2, 3)), ErrorCode::kLayoutMismatch);
}

}  // namespace
}  // namespace stresskit::classifier
