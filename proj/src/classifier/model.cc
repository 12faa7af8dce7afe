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

#include "stresskit/classifier/model.h"

#include <cmath>
#include <cstring>

#include <nlohmann/json.hpp>

#include "stresskit/error.h"
#include "stresskit/io/digest.h"
#include "stresskit/io/file_util.h"

namespace stresskit::classifier {

using nlohmann::json;

const char* ModelFamilyName(ModelFamily family) {
  switch (family) {
    case ModelFamily::kSvc: return "svc";
    case ModelFamily::kRfc: return "rfc";
    case ModelFamily::kLpa: return "lpa";
  }
  return "unknown";
}

ModelFamily ParseModelFamily(const std::string& name) {
  if (name == "svc") return ModelFamily::kSvc;
  if (name == "rfc") return ModelFamily::kRfc;
  if (name == "lpa") return ModelFamily::kLpa;
  throw Error(ErrorCode::kInvalidConfig, "unknown model family \"" + name + "\" (svc|rfc|lpa)");
}

namespace {

void CheckFinite(const Matrix& x) {
  if (!x.allFinite()) throw Error(ErrorCode::kNonFinite, "feature matrix has non-finite values");
}

double Logistic(double margin) { return 1.0 / (1.0 + std::exp(-margin)); }

// Doubles travel as base64 of their little-endian bytes, which keeps large
// payloads compact and bit-exact.
std::string EncodeDoubles(const double* data, std::size_t n) {
  return io::Base64Encode(std::span<const std::uint8_t>(
      reinterpret_cast<const std::uint8_t*>(data), n * sizeof(double)));
}

std::vector<double> DecodeDoubles(const std::string& text, std::size_t expected) {
  const std::vector<std::uint8_t> bytes = io::Base64Decode(text);
  if (bytes.size() != expected * sizeof(double)) {
    throw Error(ErrorCode::kSchemaError, "encoded array has the wrong length");
  }
  std::vector<double> out(expected);
  std::memcpy(out.data(), bytes.data(), bytes.size());
  return out;
}

json MatrixJson(const Matrix& m) {
  return json{{"rows", m.rows()},
              {"cols", m.cols()},
              {"f64le", EncodeDoubles(m.data(), static_cast<std::size_t>(m.size()))}};
}

Matrix MatrixFromJson(const json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto values = DecodeDoubles(j.at("f64le").get<std::string>(),
                                    static_cast<std::size_t>(rows * cols));
  Matrix m(rows, cols);
  std::memcpy(m.data(), values.data(), values.size() * sizeof(double));
  return m;
}

json VectorJson(const double* data, std::size_t n) {
  return json{{"size", n}, {"f64le", EncodeDoubles(data, n)}};
}

std::vector<double> VectorFromJson(const json& j) {
  return DecodeDoubles(j.at("f64le").get<std::string>(), j.at("size").get<std::size_t>());
}

json ParamsJson(const StressModel& model) {
  if (const auto* svc = std::get_if<SvcModel>(&model.params)) {
    return json{{"gamma", svc->gamma},
                {"rho", svc->rho},
                {"support_vectors", MatrixJson(svc->support_vectors)},
                {"coef", VectorJson(svc->coef.data(), static_cast<std::size_t>(svc->coef.size()))}};
  }
  if (const auto* forest = std::get_if<ForestModel>(&model.params)) {
    json trees = json::array();
    for (const auto& tree : forest->trees) {
      json feature = json::array(), threshold = json::array(), left = json::array(),
           right = json::array(), fraction = json::array();
      for (const auto& node : tree.nodes) {
        feature.push_back(node.feature);
        threshold.push_back(node.threshold);
        left.push_back(node.left);
        right.push_back(node.right);
        fraction.push_back(node.positive_fraction);
      }
      trees.push_back(json{{"feature", feature},
                           {"threshold", threshold},
                           {"left", left},
                           {"right", right},
                           {"positive_fraction", fraction}});
    }
    return json{{"trees", trees}};
  }
  const auto& lpa = std::get<LpaModel>(model.params);
  return json{{"kernel", lpa.kernel == LpaKernel::kKnnRbf ? "knn_rbf" : "rbf"},
              {"n_neighbors", lpa.n_neighbors},
              {"gamma", lpa.gamma},
              {"points", MatrixJson(lpa.points)},
              {"positive_prob",
               VectorJson(lpa.positive_prob.data(), static_cast<std::size_t>(lpa.positive_prob.size()))}};
}

void ParamsFromJson(const json& p, StressModel& model) {
  switch (model.family) {
    case ModelFamily::kSvc: {
      SvcModel svc;
      svc.gamma = p.at("gamma").get<double>();
      svc.rho = p.at("rho").get<double>();
      svc.support_vectors = MatrixFromJson(p.at("support_vectors"));
      const auto coef = VectorFromJson(p.at("coef"));
      svc.coef = Eigen::Map<const Vector>(coef.data(), static_cast<Eigen::Index>(coef.size()));
      model.params = std::move(svc);
      break;
    }
    case ModelFamily::kRfc: {
      ForestModel forest;
      for (const json& t : p.at("trees")) {
        DecisionTree tree;
        const auto& feature = t.at("feature");
        const std::size_t n = feature.size();
        if (t.at("threshold").size() != n || t.at("left").size() != n ||
            t.at("right").size() != n || t.at("positive_fraction").size() != n) {
          throw Error(ErrorCode::kSchemaError, "ragged tree arrays");
        }
        for (std::size_t i = 0; i < n; ++i) {
          TreeNode node;
          node.feature = feature[i].get<int>();
          node.threshold = t["threshold"][i].get<double>();
          node.left = t["left"][i].get<int>();
          node.right = t["right"][i].get<int>();
          node.positive_fraction = t["positive_fraction"][i].get<double>();
          const auto limit = static_cast<int>(n);
          if (node.feature >= 0 && (node.left <= 0 || node.left >= limit || node.right <= 0 ||
                                    node.right >= limit ||
                                    node.feature >= static_cast<int>(model.n_features))) {
            throw Error(ErrorCode::kSchemaError, "tree node references out of range");
          }
          tree.nodes.push_back(node);
        }
        if (tree.nodes.empty()) throw Error(ErrorCode::kSchemaError, "empty tree");
        forest.trees.push_back(std::move(tree));
      }
      model.params = std::move(forest);
      break;
    }
    case ModelFamily::kLpa: {
      LpaModel lpa;
      const auto kernel = p.at("kernel").get<std::string>();
      if (kernel != "knn_rbf" && kernel != "rbf") {
        throw Error(ErrorCode::kSchemaError, "unknown LPA kernel " + kernel);
      }
      lpa.kernel = kernel == "knn_rbf" ? LpaKernel::kKnnRbf : LpaKernel::kRbf;
      lpa.n_neighbors = p.at("n_neighbors").get<int>();
      lpa.gamma = p.at("gamma").get<double>();
      lpa.points = MatrixFromJson(p.at("points"));
      const auto prob = VectorFromJson(p.at("positive_prob"));
      lpa.positive_prob = Eigen::Map<const Vector>(prob.data(), static_cast<Eigen::Index>(prob.size()));
      if (lpa.positive_prob.size() != lpa.points.rows()) {
        throw Error(ErrorCode::kSchemaError, "LPA probabilities do not match points");
      }
      model.params = std::move(lpa);
      break;
    }
  }
}

}  // namespace

StressModel Train(const Matrix& x, const Labels& y, const TrainConfig& cfg) {
  if (static_cast<std::size_t>(x.rows()) != y.size()) {
    throw Error(ErrorCode::kLengthMismatch, "feature rows and labels differ in count");
  }
  CheckFinite(x);
  bool seen[2] = {false, false};
  for (int label : y) {
    if (label == 0 || label == 1) seen[label] = true;
  }
  if (!seen[0] || !seen[1]) {
    throw Error(ErrorCode::kSingleClass, "training labels contain a single class");
  }

  StressModel model;
  model.family = cfg.model.family;
  model.feature_digest = cfg.feature_digest;
  model.feature_config = cfg.feature_config;
  model.n_features = static_cast<std::size_t>(x.cols());
  model.norm = dsp::FitNormStats(x);
  Matrix train_x = model.norm.Apply(x);
  Labels train_y = y;
  if (cfg.smote && cfg.model.family != ModelFamily::kLpa) {
    SmoteResult balanced = SmoteOversample(train_x, train_y, *cfg.smote);
    train_x = std::move(balanced.x);
    train_y = std::move(balanced.y);
  } else if (cfg.smote) {
    // Unlabeled (-1) rows are left out of oversampling and re-appended.
    std::vector<Eigen::Index> labeled, unlabeled;
    for (std::size_t i = 0; i < train_y.size(); ++i) {
      (train_y[i] == -1 ? unlabeled : labeled).push_back(static_cast<Eigen::Index>(i));
    }
    Matrix lx(static_cast<Eigen::Index>(labeled.size()), train_x.cols());
    Labels ly;
    for (std::size_t i = 0; i < labeled.size(); ++i) {
      lx.row(static_cast<Eigen::Index>(i)) = train_x.row(labeled[i]);
      ly.push_back(train_y[static_cast<std::size_t>(labeled[i])]);
    }
    SmoteResult balanced = SmoteOversample(lx, ly, *cfg.smote);
    const Eigen::Index n_bal = balanced.x.rows();
    balanced.x.conservativeResize(n_bal + static_cast<Eigen::Index>(unlabeled.size()), Eigen::NoChange);
    for (std::size_t i = 0; i < unlabeled.size(); ++i) {
      balanced.x.row(n_bal + static_cast<Eigen::Index>(i)) = train_x.row(unlabeled[i]);
      balanced.y.push_back(-1);
    }
    train_x = std::move(balanced.x);
    train_y = std::move(balanced.y);
  }

  switch (cfg.model.family) {
    case ModelFamily::kSvc:
      model.params = TrainSvc(train_x, train_y, cfg.model.svc);
      break;
    case ModelFamily::kRfc:
      model.params = TrainForest(train_x, train_y, cfg.model.rfc);
      break;
    case ModelFamily::kLpa:
      model.params = TrainLabelPropagation(train_x, train_y, cfg.model.lpa);
      break;
  }
  return model;
}

Prediction PredictMatrix(const StressModel& model, const Matrix& x) {
  Prediction out;
  if (x.rows() == 0) return out;
  if (static_cast<std::size_t>(x.cols()) != model.n_features) {
    throw Error(ErrorCode::kLayoutMismatch,
                "model expects " + std::to_string(model.n_features) + " features, got " +
                    std::to_string(x.cols()));
  }
  CheckFinite(x);
  const Matrix z = model.norm.Apply(x);
  Vector scores;
  if (const auto* svc = std::get_if<SvcModel>(&model.params)) {
    scores = svc->Decision(z).unaryExpr([](double m) { return Logistic(m); });
  } else if (const auto* forest = std::get_if<ForestModel>(&model.params)) {
    scores = forest->Score(z);
  } else {
    scores = std::get<LpaModel>(model.params).Score(z);
  }
  out.scores.assign(scores.data(), scores.data() + scores.size());
  out.labels.resize(out.scores.size());
  for (std::size_t i = 0; i < out.scores.size(); ++i) out.labels[i] = out.scores[i] >= 0.5 ? 1 : 0;
  return out;
}

Prediction Predict(const StressModel& model, const FeatureMatrix& x) {
  if (x.config_digest != model.feature_digest) {
    throw Error(ErrorCode::kLayoutMismatch,
                "features were produced under digest " + x.config_digest +
                    ", model expects " + model.feature_digest);
  }
  if (x.rows == 0) return {};
  return PredictMatrix(model, x.ToMatrix());
}

std::string SerializeModel(const StressModel& model) {
  json doc{{"format_version", kModelFormatVersion},
           {"family", ModelFamilyName(model.family)},
           {"feature_digest", model.feature_digest},
           {"n_features", model.n_features},
           {"params", ParamsJson(model)},
           {"norm_stats",
            {{"mean", VectorJson(model.norm.mean.data(), model.norm.mean.size())},
             {"stddev", VectorJson(model.norm.stddev.data(), model.norm.stddev.size())}}}};
  if (model.feature_config) doc["feature_config"] = dsp::FeatureConfigToJson(*model.feature_config);
  return doc.dump() + "\n";
}

StressModel ParseModel(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error&) {
    throw Error(ErrorCode::kVersionMismatch, "model document header is unreadable");
  }
  if (!doc.is_object() || !doc.contains("format_version") ||
      !doc["format_version"].is_number_integer() ||
      doc["format_version"].get<int>() != kModelFormatVersion) {
    throw Error(ErrorCode::kVersionMismatch,
                "expected model format_version " + std::to_string(kModelFormatVersion));
  }
  try {
    StressModel model;
    model.family = ParseModelFamily(doc.at("family").get<std::string>());
    model.feature_digest = doc.at("feature_digest").get<std::string>();
    model.n_features = doc.at("n_features").get<std::size_t>();
    model.norm.mean = VectorFromJson(doc.at("norm_stats").at("mean"));
    model.norm.stddev = VectorFromJson(doc.at("norm_stats").at("stddev"));
    if (model.norm.mean.size() != model.n_features || model.norm.stddev.size() != model.n_features) {
      throw Error(ErrorCode::kSchemaError, "normalization stats do not match n_features");
    }
    if (doc.contains("feature_config")) {
      model.feature_config = dsp::FeatureConfigFromJson(doc["feature_config"]);
    }
    ParamsFromJson(doc.at("params"), model);
    return model;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kSchemaError, std::string("malformed model document: ") + e.what());
  }
}

void SaveModel(const StressModel& model, const std::filesystem::path& path) {
  io::WriteFileAtomic(path, SerializeModel(model));
}

StressModel LoadModel(const std::filesystem::path& path) {
  return ParseModel(io::ReadTextFile(path));
}

}  // namespace stresskit::classifier
