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

#include "mrpred/learn.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "mrpred/errors.hpp"

namespace mrpred::learn {

namespace {

double Sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// log(1 + exp(z)) without overflow.
double Softplus(double z) {
  return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

Eigen::MatrixXd Augment(const Eigen::MatrixXd& x) {
  Eigen::MatrixXd a(x.rows(), x.cols() + 1);
  a.leftCols(x.cols()) = x;
  a.col(x.cols()).setOnes();
  return a;
}

void CheckShape(const Eigen::MatrixXd& x, const std::vector<int>& y) {
  if (static_cast<std::size_t>(x.rows()) != y.size()) {
    throw DimensionMismatch("feature matrix has " + std::to_string(x.rows()) +
                            " rows but " + std::to_string(y.size()) +
                            " labels were given");
  }
  if (x.rows() < 2) throw DegenerateData("need at least two rows to train");
  int pos = 0;
  for (int v : y) {
    if (v != 0 && v != 1) throw ValueError("labels must be 0 or 1");
    pos += v;
  }
  if (pos == 0 || pos == static_cast<int>(y.size())) {
    throw DegenerateData("training data contains a single class");
  }
}

}  // namespace

std::string_view ClassifierName(ClassifierKind kind) {
  switch (kind) {
    case ClassifierKind::kRf:
      return "RF";
    case ClassifierKind::kDt:
      return "DT";
    case ClassifierKind::kGnb:
      return "GNB";
    case ClassifierKind::kSvmLinear:
      return "SVM";
    case ClassifierKind::kLr:
      return "LR";
  }
  return "?";
}

ClassifierKind ParseClassifier(std::string_view name) {
  std::string upper(name);
  for (char& c : upper) c = static_cast<char>(std::toupper(c));
  if (upper == "SVM_LINEAR") upper = "SVM";
  for (ClassifierKind k : kAllClassifiers) {
    if (upper == ClassifierName(k)) return k;
  }
  throw ValidationError("unknown classifier '" + std::string(name) +
                        "'; valid classifiers: rf, dt, gnb, svm, lr");
}

void HyperParams::Validate() const {
  auto fail = [](const std::string& what) { throw ValidationError(what); };
  if (rf_trees < 1) fail("rf_trees must be >= 1");
  if (rf_features_per_split < 0) fail("rf_features_per_split must be >= 0");
  if (dt_max_depth < 0) fail("dt_max_depth must be >= 0");
  if (dt_min_split < 2) fail("dt_min_split must be >= 2");
  if (!(gnb_var_smoothing > 0)) fail("gnb_var_smoothing must be > 0");
  if (!(svm_c > 0)) fail("svm_c must be > 0");
  if (svm_max_iter < 1) fail("svm_max_iter must be >= 1");
  if (!(lr_l2 > 0)) fail("lr_l2 must be > 0");
  if (!(lr_tol > 0)) fail("lr_tol must be > 0");
  if (lr_max_iter < 1) fail("lr_max_iter must be >= 1");
}

Scaler Scaler::Fit(const Eigen::MatrixXd& x) {
  Scaler s;
  const double n = static_cast<double>(x.rows());
  s.mean = x.colwise().mean().transpose();
  s.scale.resize(x.cols());
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    const double var = (x.col(j).array() - s.mean(j)).square().sum() / n;
    const double sd = std::sqrt(var);
    s.scale(j) = sd > 0 ? sd : 1.0;
  }
  return s;
}

Eigen::MatrixXd Scaler::Apply(const Eigen::MatrixXd& x) const {
  return (x.rowwise() - mean.transpose()).array().rowwise() /
         scale.transpose().array();
}

Eigen::RowVectorXd Scaler::Apply(const Eigen::RowVectorXd& row) const {
  return (row - mean.transpose()).array() / scale.transpose().array();
}

double LogisticLoss(const Eigen::MatrixXd& x, const std::vector<int>& y,
                    const Eigen::VectorXd& w, double b, double l2) {
  const Eigen::VectorXd z = (x * w).array() + b;
  double loss = 0.0;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    loss += Softplus(z(i)) - y[static_cast<std::size_t>(i)] * z(i);
  }
  return loss + 0.5 * l2 * w.squaredNorm();
}

Eigen::VectorXd LogisticGradient(const Eigen::MatrixXd& x,
                                 const std::vector<int>& y,
                                 const Eigen::VectorXd& w, double b,
                                 double l2) {
  const Eigen::VectorXd z = (x * w).array() + b;
  Eigen::VectorXd r(z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    r(i) = Sigmoid(z(i)) - y[static_cast<std::size_t>(i)];
  }
  Eigen::VectorXd g(w.size() + 1);
  g.head(w.size()) = x.transpose() * r + l2 * w;
  g(w.size()) = r.sum();
  return g;
}

double SvmObjective(const Eigen::MatrixXd& x, const std::vector<int>& y,
                    const Eigen::VectorXd& w, double b, double c) {
  const double n = static_cast<double>(x.rows());
  const double lambda = 1.0 / (c * n);
  const Eigen::VectorXd z = (x * w).array() + b;
  double hinge = 0.0;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    const double s = y[static_cast<std::size_t>(i)] == 1 ? 1.0 : -1.0;
    hinge += std::max(0.0, 1.0 - s * z(i));
  }
  return 0.5 * lambda * (w.squaredNorm() + b * b) + hinge / n;
}

namespace {

void TrainForest(const Eigen::MatrixXd& x, const std::vector<int>& y,
                 const HyperParams& p, bool single_tree,
                 std::vector<Tree>& trees, std::vector<double>& importances) {
  const std::size_t n = static_cast<std::size_t>(x.rows());
  const auto d = static_cast<int>(x.cols());
  std::vector<double> raw(static_cast<std::size_t>(d), 0.0);
  if (single_tree) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    TreeOptions opt{p.dt_max_depth, p.dt_min_split, 0};
    trees.push_back(GrowTree(x, y, all, opt, nullptr, raw));
  } else {
    int mtry = p.rf_features_per_split;
    if (mtry == 0) {
      mtry = std::max(
          1, static_cast<int>(std::floor(std::sqrt(static_cast<double>(d)))));
    }
    TreeOptions opt{p.dt_max_depth, p.dt_min_split, std::min(mtry, d)};
    Rng rng(p.seed);
    std::vector<std::size_t> sample(n);
    for (int t = 0; t < p.rf_trees; ++t) {
      for (std::size_t i = 0; i < n; ++i) sample[i] = rng.Below(n);
      trees.push_back(GrowTree(x, y, sample, opt, &rng, raw));
    }
  }
  const double total = std::accumulate(raw.begin(), raw.end(), 0.0);
  if (!(total > 0)) {
    throw DegenerateData("no informative split: every feature is constant");
  }
  importances.resize(raw.size());
  for (std::size_t j = 0; j < raw.size(); ++j) importances[j] = raw[j] / total;
}

}  // namespace

TrainedModel Train(ClassifierKind kind, const Eigen::MatrixXd& x,
                   const std::vector<int>& y, const HyperParams& params,
                   std::vector<std::string> feature_names) {
  params.Validate();
  CheckShape(x, y);
  if (feature_names.empty()) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      feature_names.push_back("f" + std::to_string(j));
    }
  }
  if (static_cast<Eigen::Index>(feature_names.size()) != x.cols()) {
    throw DimensionMismatch("feature name count does not match columns");
  }
  TrainedModel m;
  m.kind_ = kind;
  m.params_ = params;
  m.feature_names_ = std::move(feature_names);
  const double n = static_cast<double>(x.rows());

  switch (kind) {
    case ClassifierKind::kRf:
    case ClassifierKind::kDt:
      TrainForest(x, y, params, kind == ClassifierKind::kDt, m.trees_,
                  m.importances_);
      return m;
    default:
      break;
  }

  m.scaler_ = Scaler::Fit(x);
  const Eigen::MatrixXd xs = m.scaler_->Apply(x);
  const Eigen::Index d = xs.cols();

  if (kind == ClassifierKind::kGnb) {
    double max_var = 0.0;
    for (Eigen::Index j = 0; j < d; ++j) {
      const double mu = xs.col(j).mean();
      max_var = std::max(max_var, (xs.col(j).array() - mu).square().mean());
    }
    const double eps = params.gnb_var_smoothing * std::max(max_var, 1.0);
    for (int c = 0; c < 2; ++c) {
      std::vector<Eigen::Index> rows;
      for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] == c) rows.push_back(static_cast<Eigen::Index>(i));
      }
      const double nc = static_cast<double>(rows.size());
      Eigen::VectorXd mean = Eigen::VectorXd::Zero(d);
      for (auto r : rows) mean += xs.row(r).transpose();
      mean /= nc;
      Eigen::VectorXd var = Eigen::VectorXd::Zero(d);
      for (auto r : rows)
        var += (xs.row(r).transpose() - mean).array().square().matrix();
      var = (var / nc).array() + eps;
      m.means_[static_cast<std::size_t>(c)] = mean;
      m.vars_[static_cast<std::size_t>(c)] = var;
      m.log_priors_[static_cast<std::size_t>(c)] = std::log(nc / n);
    }
    return m;
  }

  if (kind == ClassifierKind::kLr) {
    const Eigen::MatrixXd xa = Augment(xs);
    Eigen::VectorXd theta = Eigen::VectorXd::Zero(d + 1);
    Eigen::VectorXd yv(xa.rows());
    for (Eigen::Index i = 0; i < yv.size(); ++i)
      yv(i) = y[static_cast<std::size_t>(i)];
    const double l2 = params.lr_l2;
    auto loss = [&](const Eigen::VectorXd& t) {
      return LogisticLoss(xs, y, t.head(d), t(d), l2);
    };
    m.converged_ = false;
    double current = loss(theta);
    for (int it = 0; it < params.lr_max_iter; ++it) {
      Eigen::VectorXd g = LogisticGradient(xs, y, theta.head(d), theta(d), l2);
      if (g.norm() <= params.lr_tol) {
        m.converged_ = true;
        break;
      }
      const Eigen::VectorXd z = xa * theta;
      Eigen::VectorXd wdiag(z.size());
      for (Eigen::Index i = 0; i < z.size(); ++i) {
        const double p = Sigmoid(z(i));
        wdiag(i) = p * (1.0 - p);
      }
      Eigen::MatrixXd h = xa.transpose() * wdiag.asDiagonal() * xa;
      h.diagonal().head(d).array() += l2;
      const Eigen::VectorXd step = h.ldlt().solve(g);
      const double slope = g.dot(step);
      double t = 1.0;
      Eigen::VectorXd next = theta - step;
      double next_loss = loss(next);
      while (next_loss > current - 1e-4 * t * slope && t > 1e-12) {
        t /= 2.0;
        next = theta - t * step;
        next_loss = loss(next);
      }
      if (!(next_loss < current) && t <= 1e-12) {
        // No further decrease is representable.
        m.converged_ = g.norm() <= params.lr_tol;
        break;
      }
      theta = next;
      current = next_loss;
    }
    if (!m.converged_) {
      m.converged_ =
          LogisticGradient(xs, y, theta.head(d), theta(d), l2).norm() <=
          params.lr_tol;
    }
    m.weights_ = theta.head(d);
    m.bias_ = theta(d);
    return m;
  }

  // Linear SVM: full-batch Pegasos on the augmented problem.
  const Eigen::MatrixXd xa = Augment(xs);
  const double lambda = 1.0 / (params.svm_c * n);
  const double radius = 1.0 / std::sqrt(lambda);
  Eigen::VectorXd sign(xa.rows());
  for (Eigen::Index i = 0; i < sign.size(); ++i) {
    sign(i) = y[static_cast<std::size_t>(i)] == 1 ? 1.0 : -1.0;
  }
  Eigen::VectorXd theta = Eigen::VectorXd::Zero(d + 1);
  Eigen::VectorXd best = theta;
  double best_obj = std::numeric_limits<double>::infinity();
  for (int t = 1; t <= params.svm_max_iter; ++t) {
    const Eigen::VectorXd margin = sign.cwiseProduct(xa * theta);
    double hinge = 0.0;
    Eigen::VectorXd active = Eigen::VectorXd::Zero(xa.rows());
    for (Eigen::Index i = 0; i < margin.size(); ++i) {
      if (margin(i) < 1.0) {
        hinge += 1.0 - margin(i);
        active(i) = sign(i);
      }
    }
    const double obj = 0.5 * lambda * theta.squaredNorm() + hinge / n;
    if (obj < best_obj) {
      best_obj = obj;
      best = theta;
    }
    if ((t - 1) % 100 == 0) m.svm_checkpoints_.push_back(best_obj);
    const Eigen::VectorXd grad = lambda * theta - xa.transpose() * active / n;
    theta -= grad / (lambda * t);
    const double norm = theta.norm();
    if (norm > radius) theta *= radius / norm;
  }
  {
    const Eigen::VectorXd margin = sign.cwiseProduct(xa * theta);
    double hinge = 0.0;
    for (Eigen::Index i = 0; i < margin.size(); ++i) {
      hinge += std::max(0.0, 1.0 - margin(i));
    }
    const double obj = 0.5 * lambda * theta.squaredNorm() + hinge / n;
    if (obj < best_obj) {
      best_obj = obj;
      best = theta;
    }
    m.svm_checkpoints_.push_back(best_obj);
  }
  m.weights_ = best.head(d);
  m.bias_ = best(d);
  return m;
}

TrainedModel Train(ClassifierKind kind, const dataset::Dataset& ds,
                   dataset::MrKind mr, const HyperParams& params) {
  return Train(kind, ds.rows, ds.LabelsFor(mr), params, ds.feature_names);
}

double TrainedModel::PredictScore(const Eigen::RowVectorXd& row) const {
  if (row.size() != static_cast<Eigen::Index>(feature_names_.size())) {
    throw DimensionMismatch("row has " + std::to_string(row.size()) +
                            " features, model expects " +
                            std::to_string(feature_names_.size()));
  }
  switch (kind_) {
    case ClassifierKind::kRf:
    case ClassifierKind::kDt: {
      double sum = 0.0;
      for (const auto& t : trees_) sum += t.Predict(row);
      return sum / static_cast<double>(trees_.size());
    }
    case ClassifierKind::kGnb:
      return GnbPosterior(row)[1];
    case ClassifierKind::kLr:
      return Sigmoid(scaler_->Apply(row).dot(weights_) + bias_);
    case ClassifierKind::kSvmLinear:
      return scaler_->Apply(row).dot(weights_) + bias_;
  }
  return 0.0;
}

std::array<double, 2> TrainedModel::GnbPosterior(
    const Eigen::RowVectorXd& row) const {
  if (kind_ != ClassifierKind::kGnb) throw Unsupported("not a GNB model");
  if (row.size() != static_cast<Eigen::Index>(feature_names_.size())) {
    throw DimensionMismatch("row width does not match the model");
  }
  const Eigen::RowVectorXd xs = scaler_->Apply(row);
  std::array<double, 2> log_joint{};
  for (std::size_t c = 0; c < 2; ++c) {
    double ll = log_priors_[c];
    for (Eigen::Index j = 0; j < xs.size(); ++j) {
      const double v = vars_[c](j);
      const double diff = xs(j) - means_[c](j);
      ll +=
          -0.5 * std::log(2.0 * std::numbers::pi * v) - diff * diff / (2.0 * v);
    }
    log_joint[c] = ll;
  }
  const double top = std::max(log_joint[0], log_joint[1]);
  const double e0 = std::exp(log_joint[0] - top);
  const double e1 = std::exp(log_joint[1] - top);
  return {e0 / (e0 + e1), e1 / (e0 + e1)};
}

Eigen::VectorXd TrainedModel::PredictScores(const Eigen::MatrixXd& x) const {
  Eigen::VectorXd out(x.rows());
  for (Eigen::Index i = 0; i < x.rows(); ++i) out(i) = PredictScore(x.row(i));
  return out;
}

double TrainedModel::DefaultThreshold() const {
  return kind_ == ClassifierKind::kSvmLinear ? 0.0 : 0.5;
}

int TrainedModel::PredictLabel(const Eigen::RowVectorXd& row,
                               std::optional<double> threshold) const {
  return PredictScore(row) >= threshold.value_or(DefaultThreshold()) ? 1 : 0;
}

const std::vector<double>& TrainedModel::FeatureImportances() const {
  if (kind_ != ClassifierKind::kRf && kind_ != ClassifierKind::kDt) {
    throw Unsupported("feature importances are only defined for RF and DT");
  }
  return importances_;
}

}  // namespace mrpred::learn
