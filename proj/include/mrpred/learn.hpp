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

// Binary classifiers: random forest, CART decision tree, Gaussian naive
// Bayes, linear SVM and L2-regularized logistic regression.
//
// Labels are 0/1 with 1 the positive class. Scores grow with confidence in
// the positive class.

#ifndef MRPRED_LEARN_HPP_
#define MRPRED_LEARN_HPP_

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mrpred/dataset.hpp"

namespace mrpred::learn {

enum class ClassifierKind { kRf, kDt, kGnb, kSvmLinear, kLr };

inline constexpr std::array<ClassifierKind, 5> kAllClassifiers = {
    ClassifierKind::kRf, ClassifierKind::kDt, ClassifierKind::kGnb,
    ClassifierKind::kSvmLinear, ClassifierKind::kLr};

// "RF", "DT", "GNB", "SVM", "LR".
std::string_view ClassifierName(ClassifierKind kind);
// Accepts rf, dt, gnb, svm, lr (any case). Throws ValidationError.
ClassifierKind ParseClassifier(std::string_view name);

struct HyperParams {
  int rf_trees = 100;
  int rf_features_per_split = 0;  // 0: floor(sqrt(d)), at least 1
  int dt_max_depth = 0;           // 0: unlimited
  int dt_min_split = 2;
  double gnb_var_smoothing = 1e-9;  // times the largest feature variance
  double svm_c = 1.0;
  int svm_max_iter = 10000;
  double lr_l2 = 1.0;
  double lr_tol = 1e-6;
  int lr_max_iter = 1000;
  std::uint64_t seed = 42;

  // Throws ValidationError.
  void Validate() const;
  bool operator==(const HyperParams&) const = default;
};

struct Scaler {
  Eigen::VectorXd mean;
  Eigen::VectorXd scale;  // population stddev, 1 where it is 0

  static Scaler Fit(const Eigen::MatrixXd& x);
  Eigen::MatrixXd Apply(const Eigen::MatrixXd& x) const;
  Eigen::RowVectorXd Apply(const Eigen::RowVectorXd& row) const;
};

struct TreeNode {
  int feature = -1;  // -1 for leaves
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  int samples = 0;
  double positive_fraction = 0.0;
};

struct Tree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root

  double Predict(const Eigen::RowVectorXd& row) const;
};

// Random source shared by the forest. Bounded draws use the multiply-shift
// reduction of a 64-bit output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform in [0, n).
  std::size_t Below(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

struct TreeOptions {
  int max_depth = 0;
  int min_split = 2;
  int features_per_split = 0;  // 0: consider every feature
};

// Grows a CART tree with Gini impurity on rows[sample] (duplicates allowed).
// Adds each split's weighted impurity decrease to `importance`. `rng` is only
// consumed when features_per_split > 0.
Tree GrowTree(const Eigen::MatrixXd& x, const std::vector<int>& y,
              const std::vector<std::size_t>& sample, const TreeOptions& opt,
              Rng* rng, std::vector<double>& importance);

class TrainedModel;

// Throws DegenerateData for single-class input, fewer than two rows, or a
// tree model that finds no split at all.
TrainedModel Train(ClassifierKind kind, const Eigen::MatrixXd& x,
                   const std::vector<int>& y, const HyperParams& params,
                   std::vector<std::string> feature_names = {});
TrainedModel Train(ClassifierKind kind, const dataset::Dataset& ds,
                   dataset::MrKind mr, const HyperParams& params);

class TrainedModel {
 public:
  ClassifierKind kind() const { return kind_; }
  const HyperParams& params() const { return params_; }
  const std::vector<std::string>& feature_names() const {
    return feature_names_;
  }
  const std::optional<Scaler>& scaler() const { return scaler_; }
  // False when an iterative solver hit its budget.
  bool converged() const { return converged_; }

  // Throws DimensionMismatch.
  double PredictScore(const Eigen::RowVectorXd& row) const;
  Eigen::VectorXd PredictScores(const Eigen::MatrixXd& x) const;
  // Score >= threshold; the default threshold is 0 for SVM and 0.5 otherwise.
  int PredictLabel(const Eigen::RowVectorXd& row,
                   std::optional<double> threshold = std::nullopt) const;
  double DefaultThreshold() const;

  // Normalized Gini importances. Throws Unsupported for GNB, SVM and LR.
  const std::vector<double>& FeatureImportances() const;

  // GNB posterior for both classes, {P(0|x), P(1|x)}.
  std::array<double, 2> GnbPosterior(const Eigen::RowVectorXd& row) const;

  // Linear models only.
  const Eigen::VectorXd& weights() const { return weights_; }
  double bias() const { return bias_; }
  // Best primal objective seen at every SVM checkpoint.
  const std::vector<double>& svm_checkpoints() const {
    return svm_checkpoints_;
  }

  // GNB state.
  const std::array<Eigen::VectorXd, 2>& class_means() const { return means_; }
  const std::array<Eigen::VectorXd, 2>& class_variances() const {
    return vars_;
  }

  const std::vector<Tree>& trees() const { return trees_; }

  nlohmann::json ToJson() const;
  // Throws ValidationError on malformed documents.
  static TrainedModel FromJson(const nlohmann::json& doc);

 private:
  friend TrainedModel Train(ClassifierKind, const Eigen::MatrixXd&,
                            const std::vector<int>&, const HyperParams&,
                            std::vector<std::string>);

  ClassifierKind kind_ = ClassifierKind::kRf;
  HyperParams params_;
  std::vector<std::string> feature_names_;
  std::optional<Scaler> scaler_;
  bool converged_ = true;
  std::vector<Tree> trees_;
  std::vector<double> importances_;
  std::array<double, 2> log_priors_{};
  std::array<Eigen::VectorXd, 2> means_;
  std::array<Eigen::VectorXd, 2> vars_;
  Eigen::VectorXd weights_;
  double bias_ = 0.0;
  std::vector<double> svm_checkpoints_;
};

// Regularized logistic objective on already-scaled inputs:
// sum_i logloss(y_i, sigmoid(x_i.w + b)) + (l2 / 2) * |w|^2.
double LogisticLoss(const Eigen::MatrixXd& x, const std::vector<int>& y,
                    const Eigen::VectorXd& w, double b, double l2);
// Gradient with respect to (w, b); the bias is the last entry.
Eigen::VectorXd LogisticGradient(const Eigen::MatrixXd& x,
                                 const std::vector<int>& y,
                                 const Eigen::VectorXd& w, double b, double l2);

// Primal SVM objective (lambda / 2) |(w, b)|^2 + mean hinge loss, with
// lambda = 1 / (C n).
double SvmObjective(const Eigen::MatrixXd& x, const std::vector<int>& y,
                    const Eigen::VectorXd& w, double b, double c);

nlohmann::json ParamsToJson(const HyperParams& p);
HyperParams ParamsFromJson(const nlohmann::json& doc);

}  // namespace mrpred::learn

#endif  // MRPRED_LEARN_HPP_
