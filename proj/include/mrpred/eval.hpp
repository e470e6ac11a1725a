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

// Stratified cross-validation and the classification measures.

#ifndef MRPRED_EVAL_HPP_
#define MRPRED_EVAL_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "mrpred/dataset.hpp"
#include "mrpred/learn.hpp"

namespace mrpred::eval {

struct FoldPlan {
  int k = 0;
  std::vector<int> assignments;  // fold index per row
  std::uint64_t seed = 0;
};

// Positives and negatives are shuffled separately, laid out positives first,
// and dealt round-robin. Throws FoldError if k < 2 or either class has fewer
// than k members.
FoldPlan MakeFolds(const std::vector<int>& labels, int k, std::uint64_t seed);

struct ConfusionCounts {
  int tp = 0;
  int tn = 0;
  int fp = 0;
  int fn = 0;

  int total() const { return tp + tn + fp + fn; }
  bool operator==(const ConfusionCounts&) const = default;
};

// Throws LengthMismatch.
ConfusionCounts Confusion(const std::vector<int>& predicted,
                          const std::vector<int>& truth);

struct ScalarMetrics {
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Precision, recall and F1 are 0 when their denominator is 0. Throws
// ValueError on an empty matrix.
ScalarMetrics ComputeScalarMetrics(const ConfusionCounts& c);

// Mann-Whitney estimate with ties counted half. Throws SingleClass or
// LengthMismatch.
double AucRoc(const std::vector<double>& scores, const std::vector<int>& truth);

struct FoldMetrics {
  int fold = 0;
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double auc_roc = 0.0;
};

struct EvalReport {
  dataset::MrKind mr = dataset::MrKind::kAdd;
  learn::ClassifierKind classifier = learn::ClassifierKind::kRf;
  std::vector<std::string> feature_subset;
  int k = 0;
  std::uint64_t seed = 0;
  std::string mode = "kfold";   // or "holdout"
  double train_fraction = 0.0;  // holdout only
  std::vector<FoldMetrics> per_fold;
  FoldMetrics mean;  // mean.fold = number of folds averaged
  std::vector<std::string> warnings;
};

// Trains on k-1 folds and scores the held-out fold, k times. Fold f trains
// with params.seed = seed + f. A fold whose training split cannot be fit is
// skipped with a warning; throws DegenerateData if every fold is skipped.
// An empty `subset` means every feature.
EvalReport CrossValidate(const dataset::Dataset& ds, dataset::MrKind mr,
                         learn::ClassifierKind kind,
                         const learn::HyperParams& params,
                         const std::vector<std::string>& subset, int k,
                         std::uint64_t seed);

// `repeats` stratified train/test splits with `train_fraction` of each class
// in training. Repeat r uses seed + r.
EvalReport RepeatedHoldout(const dataset::Dataset& ds, dataset::MrKind mr,
                           learn::ClassifierKind kind,
                           const learn::HyperParams& params,
                           const std::vector<std::string>& subset,
                           double train_fraction, int repeats,
                           std::uint64_t seed);

nlohmann::json ReportToJson(const EvalReport& report);
EvalReport ReportFromJson(const nlohmann::json& doc);

}  // namespace mrpred::eval

#endif  // MRPRED_EVAL_HPP_
