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

#include "mrpred/eval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mrpred/errors.hpp"

namespace mrpred::eval {

using nlohmann::json;

namespace {

void Shuffle(std::vector<std::size_t>& v, learn::Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[rng.Below(i)]);
  }
}

Eigen::MatrixXd TakeRows(const Eigen::MatrixXd& x,
                         const std::vector<std::size_t>& rows) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(rows.size()), x.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.row(static_cast<Eigen::Index>(i)) =
        x.row(static_cast<Eigen::Index>(rows[i]));
  }
  return out;
}

std::vector<int> Take(const std::vector<int>& v,
                      const std::vector<std::size_t>& rows) {
  std::vector<int> out;
  out.reserve(rows.size());
  for (std::size_t r : rows) out.push_back(v[r]);
  return out;
}

// Trains on `train`, scores `test`; nullopt (plus a warning) when the
// training split cannot be fit.
std::optional<FoldMetrics> RunSplit(
    const dataset::Dataset& ds, const std::vector<int>& y,
    learn::ClassifierKind kind, learn::HyperParams params,
    const std::vector<std::size_t>& train, const std::vector<std::size_t>& test,
    int fold, std::vector<std::string>& warnings) {
  std::vector<int> y_train = Take(y, train);
  std::vector<int> y_test = Take(y, test);
  learn::TrainedModel model;
  try {
    model = learn::Train(kind, TakeRows(ds.rows, train), y_train, params,
                         ds.feature_names);
  } catch (const DegenerateData& e) {
    warnings.push_back("fold " + std::to_string(fold) +
                       " skipped: " + e.what());
    return std::nullopt;
  }
  if (!model.converged()) {
    warnings.push_back("fold " + std::to_string(fold) +
                       ": solver stopped before reaching tolerance");
  }
  const Eigen::MatrixXd x_test = TakeRows(ds.rows, test);
  const Eigen::VectorXd scores = model.PredictScores(x_test);
  const double threshold = model.DefaultThreshold();
  std::vector<int> predicted;
  std::vector<double> score_list;
  for (Eigen::Index i = 0; i < scores.size(); ++i) {
    predicted.push_back(scores(i) >= threshold ? 1 : 0);
    score_list.push_back(scores(i));
  }
  ScalarMetrics s = ComputeScalarMetrics(Confusion(predicted, y_test));
  FoldMetrics m;
  m.fold = fold;
  m.accuracy = s.accuracy;
  m.precision = s.precision;
  m.recall = s.recall;
  m.f1 = s.f1;
  try {
    m.auc_roc = AucRoc(score_list, y_test);
  } catch (const SingleClass&) {
    warnings.push_back("fold " + std::to_string(fold) +
                       " skipped: test split holds a single class");
    return std::nullopt;
  }
  return m;
}

void Aggregate(EvalReport& report) {
  if (report.per_fold.empty()) {
    throw DegenerateData("every fold was skipped");
  }
  FoldMetrics mean;
  for (const auto& f : report.per_fold) {
    mean.accuracy += f.accuracy;
    mean.precision += f.precision;
    mean.recall += f.recall;
    mean.f1 += f.f1;
    mean.auc_roc += f.auc_roc;
  }
  const double n = static_cast<double>(report.per_fold.size());
  mean.accuracy /= n;
  mean.precision /= n;
  mean.recall /= n;
  mean.f1 /= n;
  mean.auc_roc /= n;
  mean.fold = static_cast<int>(report.per_fold.size());
  report.mean = mean;
}

dataset::Dataset Subset(const dataset::Dataset& ds,
                        const std::vector<std::string>& subset) {
  return subset.empty() ? ds : dataset::SelectFeatures(ds, subset);
}

json FoldToJson(const FoldMetrics& f, bool with_fold) {
  json j;
  if (with_fold) j["fold"] = f.fold;
  j["accuracy"] = f.accuracy;
  j["precision"] = f.precision;
  j["recall"] = f.recall;
  j["f1"] = f.f1;
  j["auc_roc"] = f.auc_roc;
  return j;
}

FoldMetrics FoldFromJson(const json& j) {
  FoldMetrics f;
  f.fold = j.value("fold", 0);
  f.accuracy = j.at("accuracy").get<double>();
  f.precision = j.at("precision").get<double>();
  f.recall = j.at("recall").get<double>();
  f.f1 = j.at("f1").get<double>();
  f.auc_roc = j.at("auc_roc").get<double>();
  return f;
}

}  // namespace

FoldPlan MakeFolds(const std::vector<int>& labels, int k, std::uint64_t seed) {
  if (k < 2) throw FoldError("k must be at least 2");
  std::vector<std::size_t> pos;
  std::vector<std::size_t> neg;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    (labels[i] == 1 ? pos : neg).push_back(i);
  }
  if (pos.size() < static_cast<std::size_t>(k) ||
      neg.size() < static_cast<std::size_t>(k)) {
    throw FoldError("each class needs at least " + std::to_string(k) +
                    " members (positives: " + std::to_string(pos.size()) +
                    ", negatives: " + std::to_string(neg.size()) + ")");
  }
  learn::Rng rng(seed);
  Shuffle(pos, rng);
  Shuffle(neg, rng);
  FoldPlan plan;
  plan.k = k;
  plan.seed = seed;
  plan.assignments.assign(labels.size(), 0);
  std::size_t slot = 0;
  for (auto* group : {&pos, &neg}) {
    for (std::size_t row : *group) {
      plan.assignments[row] =
          static_cast<int>(slot++ % static_cast<std::size_t>(k));
    }
  }
  return plan;
}

ConfusionCounts Confusion(const std::vector<int>& predicted,
                          const std::vector<int>& truth) {
  if (predicted.size() != truth.size()) {
    throw LengthMismatch("predictions and truth differ in length");
  }
  ConfusionCounts c;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (truth[i] == 1) {
      (predicted[i] == 1 ? c.tp : c.fn)++;
    } else {
      (predicted[i] == 1 ? c.fp : c.tn)++;
    }
  }
  return c;
}

ScalarMetrics ComputeScalarMetrics(const ConfusionCounts& c) {
  if (c.total() <= 0) throw ValueError("confusion matrix is empty");
  ScalarMetrics m;
  m.accuracy = static_cast<double>(c.tp + c.tn) / c.total();
  m.precision =
      c.tp + c.fp > 0 ? static_cast<double>(c.tp) / (c.tp + c.fp) : 0.0;
  m.recall = c.tp + c.fn > 0 ? static_cast<double>(c.tp) / (c.tp + c.fn) : 0.0;
  // Harmonic mean of precision and recall, written over the counts.
  const int f1_den = 2 * c.tp + c.fp + c.fn;
  m.f1 = c.tp > 0 ? static_cast<double>(2 * c.tp) / f1_den : 0.0;
  return m;
}

double AucRoc(const std::vector<double>& scores,
              const std::vector<int>& truth) {
  if (scores.size() != truth.size()) {
    throw LengthMismatch("scores and truth differ in length");
  }
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] < scores[b];
  });
  // Counts are integers, so accumulate exactly and divide once.
  double wins = 0.0;  // twice the Mann-Whitney U
  double neg_below = 0.0;
  double pos_total = 0.0;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    double pos = 0.0;
    double neg = 0.0;
    while (j < order.size() && scores[order[j]] == scores[order[i]]) {
      (truth[order[j]] == 1 ? pos : neg) += 1.0;
      ++j;
    }
    wins += pos * (2.0 * neg_below + neg);
    neg_below += neg;
    pos_total += pos;
    i = j;
  }
  if (pos_total == 0 || neg_below == 0) {
    throw SingleClass("AUC-ROC needs both classes");
  }
  return wins / (2.0 * pos_total * neg_below);
}

EvalReport CrossValidate(const dataset::Dataset& ds_in, dataset::MrKind mr,
                         learn::ClassifierKind kind,
                         const learn::HyperParams& params,
                         const std::vector<std::string>& subset, int k,
                         std::uint64_t seed) {
  const dataset::Dataset ds = Subset(ds_in, subset);
  const std::vector<int> y = ds.LabelsFor(mr);
  FoldPlan plan = MakeFolds(y, k, seed);
  EvalReport report;
  report.mr = mr;
  report.classifier = kind;
  report.feature_subset = ds.feature_names;
  report.k = k;
  report.seed = seed;
  for (int f = 0; f < k; ++f) {
    std::vector<std::size_t> train;
    std::vector<std::size_t> test;
    for (std::size_t i = 0; i < y.size(); ++i) {
      (plan.assignments[i] == f ? test : train).push_back(i);
    }
    learn::HyperParams p = params;
    p.seed = seed + static_cast<std::uint64_t>(f);
    auto m = RunSplit(ds, y, kind, p, train, test, f, report.warnings);
    if (m) report.per_fold.push_back(*m);
  }
  Aggregate(report);
  return report;
}

EvalReport RepeatedHoldout(const dataset::Dataset& ds_in, dataset::MrKind mr,
                           learn::ClassifierKind kind,
                           const learn::HyperParams& params,
                           const std::vector<std::string>& subset,
                           double train_fraction, int repeats,
                           std::uint64_t seed) {
  if (!(train_fraction > 0 && train_fraction < 1)) {
    throw ValidationError("train fraction must lie strictly between 0 and 1");
  }
  if (repeats < 1) throw ValidationError("repeats must be >= 1");
  const dataset::Dataset ds = Subset(ds_in, subset);
  const std::vector<int> y = ds.LabelsFor(mr);
  std::vector<std::size_t> pos;
  std::vector<std::size_t> neg;
  for (std::size_t i = 0; i < y.size(); ++i)
    (y[i] == 1 ? pos : neg).push_back(i);
  auto train_count = [&](std::size_t n) {
    auto c = static_cast<std::size_t>(
        std::llround(train_fraction * static_cast<double>(n)));
    return std::clamp<std::size_t>(c, 1, n - 1);
  };
  if (pos.size() < 2 || neg.size() < 2) {
    throw FoldError("holdout needs at least two members of each class");
  }
  EvalReport report;
  report.mr = mr;
  report.classifier = kind;
  report.feature_subset = ds.feature_names;
  report.k = repeats;
  report.seed = seed;
  report.mode = "holdout";
  report.train_fraction = train_fraction;
  for (int r = 0; r < repeats; ++r) {
    learn::Rng rng(seed + static_cast<std::uint64_t>(r));
    std::vector<std::size_t> p = pos;
    std::vector<std::size_t> q = neg;
    Shuffle(p, rng);
    Shuffle(q, rng);
    std::vector<std::size_t> train;
    std::vector<std::size_t> test;
    const std::size_t tp = train_count(p.size());
    const std::size_t tq = train_count(q.size());
    for (std::size_t i = 0; i < p.size(); ++i)
      (i < tp ? train : test).push_back(p[i]);
    for (std::size_t i = 0; i < q.size(); ++i)
      (i < tq ? train : test).push_back(q[i]);
    std::sort(train.begin(), train.end());
    std::sort(test.begin(), test.end());
    learn::HyperParams hp = params;
    hp.seed = seed + static_cast<std::uint64_t>(r);
    auto m = RunSplit(ds, y, kind, hp, train, test, r, report.warnings);
    if (m) report.per_fold.push_back(*m);
  }
  Aggregate(report);
  return report;
}

json ReportToJson(const EvalReport& report) {
  json j;
  j["mr"] = std::string(dataset::MrName(report.mr));
  j["classifier"] = std::string(learn::ClassifierName(report.classifier));
  j["feature_subset"] = report.feature_subset;
  j["mode"] = report.mode;
  j["k"] = report.k;
  if (report.mode == "holdout") j["train_fraction"] = report.train_fraction;
  j["seed"] = report.seed;
  json folds = json::array();
  for (const auto& f : report.per_fold) folds.push_back(FoldToJson(f, true));
  j["per_fold"] = folds;
  j["effective_folds"] = report.per_fold.size();
  j["mean"] = FoldToJson(report.mean, false);
  j["warnings"] = report.warnings;
  return j;
}

EvalReport ReportFromJson(const json& j) {
  try {
    EvalReport r;
    r.mr = dataset::ParseMr(j.at("mr").get<std::string>());
    r.classifier =
        learn::ParseClassifier(j.at("classifier").get<std::string>());
    r.feature_subset = j.at("feature_subset").get<std::vector<std::string>>();
    r.mode = j.value("mode", std::string("kfold"));
    r.k = j.at("k").get<int>();
    r.train_fraction = j.value("train_fraction", 0.0);
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& f : j.at("per_fold"))
      r.per_fold.push_back(FoldFromJson(f));
    r.mean = FoldFromJson(j.at("mean"));
    r.mean.fold = static_cast<int>(r.per_fold.size());
    r.warnings = j.value("warnings", std::vector<std::string>{});
    return r;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed evaluation report: ") +
                          e.what());
  }
}

}  // namespace mrpred::eval
