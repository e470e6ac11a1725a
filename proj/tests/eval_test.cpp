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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mrpred/errors.hpp"
#include "support.hpp"

namespace mrpred::eval {
namespace {

using dataset::MrKind;
using learn::ClassifierKind;

std::vector<int> Labels(int n, int positives) {
  std::vector<int> y(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < positives; ++i)
    y[static_cast<std::size_t>(i * n / positives)] = 1;
  return y;
}

void ExpectStratified(const std::vector<int>& y, const FoldPlan& plan) {
  ASSERT_EQ(plan.assignments.size(), y.size());
  std::vector<int> pos(static_cast<std::size_t>(plan.k), 0);
  int n_pos = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const int f = plan.assignments[i];
    ASSERT_GE(f, 0);
    ASSERT_LT(f, plan.k);
    pos[static_cast<std::size_t>(f)] += y[i];
    n_pos += y[i];
  }
  const double target = std::round(static_cast<double>(n_pos) / plan.k);
  for (int c : pos) EXPECT_LE(std::abs(c - target), 1.0);
}

TEST(MakeFolds, HundredRowsFiftySixPositives) {
  auto y = Labels(100, 56);
  FoldPlan plan = MakeFolds(y, 10, 42);
  std::vector<int> rows(10, 0), pos(10, 0);
  for (std::size_t i = 0; i < y.size(); ++i) {
    ++rows[static_cast<std::size_t>(plan.assignments[i])];
    pos[static_cast<std::size_t>(plan.assignments[i])] += y[i];
  }
  for (int f = 0; f < 10; ++f) {
    EXPECT_EQ(rows[static_cast<std::size_t>(f)], 10);
    EXPECT_GE(pos[static_cast<std::size_t>(f)], 5);
    EXPECT_LE(pos[static_cast<std::size_t>(f)], 6);
  }
}

TEST(MakeFolds, ExactDivisibility) {
  auto y = Labels(10, 5);
  FoldPlan plan = MakeFolds(y, 5, 1);
  std::vector<int> pos(5, 0), neg(5, 0);
  for (std::size_t i = 0; i < y.size(); ++i) {
    (y[i] ? pos : neg)[static_cast<std::size_t>(plan.assignments[i])]++;
  }
  for (int f = 0; f < 5; ++f) {
    EXPECT_EQ(pos[static_cast<std::size_t>(f)], 1);
    EXPECT_EQ(neg[static_cast<std::size_t>(f)], 1);
  }
}

TEST(MakeFolds, Errors) {
  EXPECT_THROW(MakeFolds(Labels(6, 2), 4, 0), FoldError);
  EXPECT_THROW(MakeFolds(Labels(10, 5), 1, 0), FoldError);
  EXPECT_THROW(MakeFolds(std::vector<int>(10, 1), 2, 0), FoldError);
}

TEST(MakeFolds, StratifiedAndDeterministicProperty) {
  std::mt19937_64 gen(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 2 + static_cast<int>(gen() % 9);
    const int n_pos = k + static_cast<int>(gen() % 60);
    const int n_neg = k + static_cast<int>(gen() % 60);
    std::vector<int> y(static_cast<std::size_t>(n_pos), 1);
    y.resize(static_cast<std::size_t>(n_pos + n_neg), 0);
    std::shuffle(y.begin(), y.end(), gen);
    const std::uint64_t seed = gen();
    FoldPlan plan = MakeFolds(y, k, seed);
    EXPECT_EQ(plan.k, k);
    ExpectStratified(y, plan);
    EXPECT_EQ(MakeFolds(y, k, seed).assignments, plan.assignments);
  }
}

TEST(MakeFolds, SeedChangesLayout) {
  auto y = Labels(100, 56);
  EXPECT_NE(MakeFolds(y, 10, 1).assignments, MakeFolds(y, 10, 2).assignments);
}

TEST(Confusion, Examples) {
  EXPECT_EQ(Confusion({1, 0, 1}, {1, 0, 1}), (ConfusionCounts{2, 1, 0, 0}));
  EXPECT_EQ(Confusion({1, 1}, {0, 0}).fp, 2);
  EXPECT_EQ(Confusion({0, 1, 0, 1}, {1, 1, 0, 0}),
            (ConfusionCounts{1, 1, 1, 1}));
  EXPECT_THROW(Confusion({1}, {1, 0}), LengthMismatch);
}

TEST(ScalarMetrics, WorkedExample) {
  ScalarMetrics m = ComputeScalarMetrics({3, 5, 1, 1});
  // Independent evaluation of the textbook formulas.
  EXPECT_NEAR(m.recall, 3.0 / 4.0, 1e-15);
  EXPECT_NEAR(m.precision, 3.0 / 4.0, 1e-15);
  EXPECT_NEAR(m.accuracy, 8.0 / 10.0, 1e-15);
  EXPECT_NEAR(m.f1, 2 * 0.75 * 0.75 / 1.5, 1e-15);
}

TEST(ScalarMetrics, Conventions) {
  ScalarMetrics none = ComputeScalarMetrics({0, 4, 0, 2});
  EXPECT_EQ(none.precision, 0.0);
  EXPECT_EQ(none.recall, 0.0);
  EXPECT_EQ(none.f1, 0.0);
  EXPECT_NEAR(none.accuracy, 4.0 / 6.0, 1e-15);
  EXPECT_THROW(ComputeScalarMetrics({}), ValueError);
}

TEST(ScalarMetrics, PerfectPredictionIsAllOnes) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> y(20);
    for (auto& v : y) v = static_cast<int>(gen() % 2);
    y[0] = 1;
    ScalarMetrics m = ComputeScalarMetrics(Confusion(y, y));
    EXPECT_EQ(m.accuracy, 1.0);
    EXPECT_EQ(m.precision, 1.0);
    EXPECT_EQ(m.recall, 1.0);
    EXPECT_EQ(m.f1, 1.0);
  }
}

TEST(Auc, Examples) {
  EXPECT_EQ(AucRoc({0.9, 0.8, 0.3, 0.1}, {1, 1, 0, 0}), 1.0);
  EXPECT_EQ(AucRoc({0.5, 0.5}, {1, 0}), 0.5);
  EXPECT_EQ(AucRoc({0.9, 0.4, 0.6, 0.2}, {1, 0, 1, 0}), 1.0);
  EXPECT_EQ(AucRoc({0.9, 0.6, 0.4, 0.2}, {1, 0, 1, 0}), 0.75);
  EXPECT_EQ(testing::BruteForceAuc({0.9, 0.6, 0.4, 0.2}, {1, 0, 1, 0}), 0.75);
  EXPECT_THROW(AucRoc({0.1, 0.2}, {1, 1}), SingleClass);
  EXPECT_THROW(AucRoc({0.1}, {1, 0}), LengthMismatch);
}

TEST(Auc, MatchesPairwiseOracle) {
  std::mt19937_64 gen(21);
  std::uniform_int_distribution<int> level(0, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(gen() % 60);
    std::vector<double> s(static_cast<std::size_t>(n));
    std::vector<int> y(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      // Coarse levels force plenty of ties.
      s[static_cast<std::size_t>(i)] = level(gen) * 0.125;
      y[static_cast<std::size_t>(i)] = static_cast<int>(gen() % 2);
    }
    y[0] = 1;
    y[1] = 0;
    EXPECT_NEAR(AucRoc(s, y), testing::BruteForceAuc(s, y), 1e-12);
  }
}

TEST(Auc, MonotoneTransformAndComplement) {
  std::mt19937_64 gen(22);
  std::normal_distribution<double> n01(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> s(40), t(40), neg(40);
    std::vector<int> y(40);
    for (std::size_t i = 0; i < 40; ++i) {
      s[i] = n01(gen);
      t[i] = std::exp(3 * s[i]) + 7;
      neg[i] = -s[i];
      y[i] = static_cast<int>(i % 3 == 0);
    }
    const double a = AucRoc(s, y);
    EXPECT_GE(a, 0.0);
    EXPECT_LE(a, 1.0);
    EXPECT_EQ(AucRoc(t, y), a);
    EXPECT_NEAR(a + AucRoc(neg, y), 1.0, 1e-12);
  }
}

TEST(CrossValidate, MeanIsFoldAverage) {
  auto ds = testing::PermutedLabels(testing::SeparableDataset(80, 4, 3), 9);
  EvalReport r = CrossValidate(ds, MrKind::kAdd, ClassifierKind::kDt,
                               learn::HyperParams{}, {}, 10, 5);
  ASSERT_EQ(r.per_fold.size(), 10u);
  EXPECT_EQ(r.mean.fold, 10);
  EXPECT_TRUE(r.warnings.empty());
  double acc = 0, pre = 0, rec = 0, f1 = 0, auc = 0;
  for (const auto& f : r.per_fold) {
    for (double v : {f.accuracy, f.precision, f.recall, f.f1, f.auc_roc}) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
    acc += f.accuracy;
    pre += f.precision;
    rec += f.recall;
    f1 += f.f1;
    auc += f.auc_roc;
  }
  EXPECT_NEAR(r.mean.accuracy, acc / 10, 1e-12);
  EXPECT_NEAR(r.mean.precision, pre / 10, 1e-12);
  EXPECT_NEAR(r.mean.recall, rec / 10, 1e-12);
  EXPECT_NEAR(r.mean.f1, f1 / 10, 1e-12);
  EXPECT_NEAR(r.mean.auc_roc, auc / 10, 1e-12);
  EXPECT_EQ(r.feature_subset, ds.feature_names);
}

TEST(CrossValidate, Deterministic) {
  auto ds = testing::PermutedLabels(testing::SeparableDataset(60, 4, 4), 2);
  for (ClassifierKind kind : learn::kAllClassifiers) {
    auto a = ReportToJson(
        CrossValidate(ds, MrKind::kAdd, kind, learn::HyperParams{}, {}, 5, 17));
    auto b = ReportToJson(
        CrossValidate(ds, MrKind::kAdd, kind, learn::HyperParams{}, {}, 5, 17));
    EXPECT_EQ(a.dump(), b.dump()) << learn::ClassifierName(kind);
  }
}

TEST(CrossValidate, BayesZeroDataIsLearned) {
  auto ds = testing::SeparableDataset(100, 5, 10);
  for (ClassifierKind kind : learn::kAllClassifiers) {
    EvalReport r =
        CrossValidate(ds, MrKind::kAdd, kind, learn::HyperParams{}, {}, 10, 42);
    EXPECT_GE(r.mean.accuracy, 0.95) << learn::ClassifierName(kind);
    EXPECT_GE(r.mean.auc_roc, 0.95) << learn::ClassifierName(kind);
  }
}

TEST(CrossValidate, PermutedLabelsGiveChanceAuc) {
  auto base = testing::SeparableDataset(200, 5, 11);
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto ds = testing::PermutedLabels(base, 1000 + s);
    EvalReport r = CrossValidate(ds, MrKind::kAdd, ClassifierKind::kRf,
                                 learn::HyperParams{}, {}, 10, s);
    EXPECT_GE(r.mean.auc_roc, 0.35) << s;
    EXPECT_LE(r.mean.auc_roc, 0.65) << s;
  }
}

TEST(CrossValidate, SubsetAndErrors) {
  auto ds = testing::SeparableDataset(40, 4, 12);
  EvalReport r = CrossValidate(ds, MrKind::kAdd, ClassifierKind::kGnb,
                               learn::HyperParams{}, {"f2", "f0"}, 4, 1);
  EXPECT_EQ(r.feature_subset, (std::vector<std::string>{"f2", "f0"}));
  EXPECT_THROW(CrossValidate(ds, MrKind::kAdd, ClassifierKind::kGnb,
                             learn::HyperParams{}, {"nope"}, 4, 1),
               UnknownFeature);
  EXPECT_THROW(CrossValidate(ds, MrKind::kAdd, ClassifierKind::kGnb,
                             learn::HyperParams{}, {}, 30, 1),
               FoldError);
}

TEST(RepeatedHoldout, SplitsAndAverages) {
  auto ds = testing::SeparableDataset(100, 3, 13);
  EvalReport r = RepeatedHoldout(ds, MrKind::kAdd, ClassifierKind::kLr,
                                 learn::HyperParams{}, {}, 0.7, 10, 3);
  EXPECT_EQ(r.mode, "holdout");
  EXPECT_EQ(r.per_fold.size(), 10u);
  EXPECT_DOUBLE_EQ(r.train_fraction, 0.7);
  EXPECT_GE(r.mean.accuracy, 0.95);
  double acc = 0;
  for (const auto& f : r.per_fold) acc += f.accuracy;
  EXPECT_NEAR(r.mean.accuracy, acc / 10, 1e-12);
  auto again = RepeatedHoldout(ds, MrKind::kAdd, ClassifierKind::kLr,
                               learn::HyperParams{}, {}, 0.7, 10, 3);
  EXPECT_EQ(ReportToJson(again).dump(), ReportToJson(r).dump());
}

TEST(Report, JsonRoundTrip) {
  auto ds = testing::SeparableDataset(40, 3, 14);
  EvalReport r = CrossValidate(ds, MrKind::kMul, ClassifierKind::kSvmLinear,
                               learn::HyperParams{}, {}, 4, 8);
  nlohmann::json doc = ReportToJson(r);
  for (const char* key : {"mr", "classifier", "feature_subset", "k", "seed",
                          "per_fold", "mean", "warnings"}) {
    EXPECT_TRUE(doc.contains(key)) << key;
  }
  EXPECT_EQ(doc["mr"], "MUL");
  EXPECT_EQ(ReportToJson(ReportFromJson(doc)), doc);
}

}  // namespace
}  // namespace mrpred::eval
