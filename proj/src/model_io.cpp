// Copyright 2026 The mrpred Authors.
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

#include "mrpred/errors.hpp"
#include "mrpred/learn.hpp"

namespace mrpred::learn {

using nlohmann::json;

namespace {

json VectorToJson(const Eigen::VectorXd& v) {
  return json(std::vector<double>(v.data(), v.data() + v.size()));
}

Eigen::VectorXd VectorFromJson(const json& j) {
  auto values = j.get<std::vector<double>>();
  return Eigen::Map<Eigen::VectorXd>(values.data(),
                                     static_cast<Eigen::Index>(values.size()));
}

json TreeToJson(const Tree& t) {
  json j;
  std::vector<int> feature, left, right, samples;
  std::vector<double> threshold, fraction;
  for (const auto& n : t.nodes) {
    feature.push_back(n.feature);
    threshold.push_back(n.threshold);
    left.push_back(n.left);
    right.push_back(n.right);
    samples.push_back(n.samples);
    fraction.push_back(n.positive_fraction);
  }
  j["feature"] = feature;
  j["threshold"] = threshold;
  j["left"] = left;
  j["right"] = right;
  j["samples"] = samples;
  j["positive_fraction"] = fraction;
  return j;
}

Tree TreeFromJson(const json& j) {
  auto feature = j.at("feature").get<std::vector<int>>();
  auto threshold = j.at("threshold").get<std::vector<double>>();
  auto left = j.at("left").get<std::vector<int>>();
  auto right = j.at("right").get<std::vector<int>>();
  auto samples = j.at("samples").get<std::vector<int>>();
  auto fraction = j.at("positive_fraction").get<std::vector<double>>();
  const std::size_t n = feature.size();
  if (n == 0 || threshold.size() != n || left.size() != n ||
      right.size() != n || samples.size() != n || fraction.size() != n) {
    throw ValidationError("malformed tree in model document");
  }
  Tree t;
  for (std::size_t i = 0; i < n; ++i) {
    if (feature[i] >= 0 && (left[i] <= 0 || right[i] <= 0 ||
                            static_cast<std::size_t>(left[i]) >= n ||
                            static_cast<std::size_t>(right[i]) >= n)) {
      throw ValidationError("tree node " + std::to_string(i) +
                            " has an invalid child index");
    }
    t.nodes.push_back(
        {feature[i], threshold[i], left[i], right[i], samples[i], fraction[i]});
  }
  return t;
}

}  // namespace

json ParamsToJson(const HyperParams& p) {
  return json{{"rf_trees", p.rf_trees},
              {"rf_features_per_split", p.rf_features_per_split},
              {"dt_max_depth", p.dt_max_depth},
              {"dt_min_split", p.dt_min_split},
              {"gnb_var_smoothing", p.gnb_var_smoothing},
              {"svm_c", p.svm_c},
              {"svm_max_iter", p.svm_max_iter},
              {"lr_l2", p.lr_l2},
              {"lr_tol", p.lr_tol},
              {"lr_max_iter", p.lr_max_iter},
              {"seed", p.seed}};
}

HyperParams ParamsFromJson(const json& j) {
  HyperParams p;
  p.rf_trees = j.value("rf_trees", p.rf_trees);
  p.rf_features_per_split =
      j.value("rf_features_per_split", p.rf_features_per_split);
  p.dt_max_depth = j.value("dt_max_depth", p.dt_max_depth);
  p.dt_min_split = j.value("dt_min_split", p.dt_min_split);
  p.gnb_var_smoothing = j.value("gnb_var_smoothing", p.gnb_var_smoothing);
  p.svm_c = j.value("svm_c", p.svm_c);
  p.svm_max_iter = j.value("svm_max_iter", p.svm_max_iter);
  p.lr_l2 = j.value("lr_l2", p.lr_l2);
  p.lr_tol = j.value("lr_tol", p.lr_tol);
  p.lr_max_iter = j.value("lr_max_iter", p.lr_max_iter);
  p.seed = j.value("seed", p.seed);
  p.Validate();
  return p;
}

json TrainedModel::ToJson() const {
  json doc;
  doc["kind"] = std::string(ClassifierName(kind_));
  doc["params"] = ParamsToJson(params_);
  if (scaler_) {
    doc["scaler"] = {{"mean", VectorToJson(scaler_->mean)},
                     {"scale", VectorToJson(scaler_->scale)}};
  } else {
    doc["scaler"] = nullptr;
  }
  doc["feature_names"] = feature_names_;
  json state;
  switch (kind_) {
    case ClassifierKind::kRf:
    case ClassifierKind::kDt: {
      json trees = json::array();
      for (const auto& t : trees_) trees.push_back(TreeToJson(t));
      state["trees"] = trees;
      break;
    }
    case ClassifierKind::kGnb:
      state["log_priors"] = {log_priors_[0], log_priors_[1]};
      state["means"] = {VectorToJson(means_[0]), VectorToJson(means_[1])};
      state["variances"] = {VectorToJson(vars_[0]), VectorToJson(vars_[1])};
      break;
    case ClassifierKind::kSvmLinear:
      state["checkpoints"] = svm_checkpoints_;
      [[fallthrough]];
    case ClassifierKind::kLr:
      state["weights"] = VectorToJson(weights_);
      state["bias"] = bias_;
      break;
  }
  state["converged"] = converged_;
  doc["model_state"] = state;
  if (importances_.empty()) {
    doc["importances"] = nullptr;
  } else {
    doc["importances"] = importances_;
  }
  return doc;
}

TrainedModel TrainedModel::FromJson(const json& doc) {
  try {
    TrainedModel m;
    m.kind_ = ParseClassifier(doc.at("kind").get<std::string>());
    m.params_ = ParamsFromJson(doc.at("params"));
    m.feature_names_ = doc.at("feature_names").get<std::vector<std::string>>();
    const std::size_t d = m.feature_names_.size();
    const json& scaler = doc.at("scaler");
    if (!scaler.is_null()) {
      m.scaler_ = Scaler{VectorFromJson(scaler.at("mean")),
                         VectorFromJson(scaler.at("scale"))};
      if (static_cast<std::size_t>(m.scaler_->mean.size()) != d ||
          static_cast<std::size_t>(m.scaler_->scale.size()) != d) {
        throw ValidationError("scaler width does not match feature_names");
      }
    }
    const json& state = doc.at("model_state");
    m.converged_ = state.value("converged", true);
    switch (m.kind_) {
      case ClassifierKind::kRf:
      case ClassifierKind::kDt:
        for (const auto& t : state.at("trees")) {
          m.trees_.push_back(TreeFromJson(t));
          for (const auto& n : m.trees_.back().nodes) {
            if (n.feature >= static_cast<int>(d)) {
              throw ValidationError("tree references an unknown feature");
            }
          }
        }
        if (m.trees_.empty()) throw ValidationError("forest has no trees");
        m.importances_ = doc.at("importances").get<std::vector<double>>();
        break;
      case ClassifierKind::kGnb:
        for (std::size_t c = 0; c < 2; ++c) {
          m.log_priors_[c] = state.at("log_priors").at(c).get<double>();
          m.means_[c] = VectorFromJson(state.at("means").at(c));
          m.vars_[c] = VectorFromJson(state.at("variances").at(c));
        }
        break;
      case ClassifierKind::kSvmLinear:
        m.svm_checkpoints_ = state.value("checkpoints", std::vector<double>{});
        [[fallthrough]];
      case ClassifierKind::kLr:
        m.weights_ = VectorFromJson(state.at("weights"));
        m.bias_ = state.at("bias").get<double>();
        if (static_cast<std::size_t>(m.weights_.size()) != d) {
          throw ValidationError(
              "weight vector width does not match feature_names");
        }
        break;
    }
    if (m.kind_ != ClassifierKind::kRf && m.kind_ != ClassifierKind::kDt &&
        !m.scaler_) {
      throw ValidationError("model document lacks a scaler");
    }
    return m;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed model document: ") + e.what());
  }
}

}  // namespace mrpred::learn
