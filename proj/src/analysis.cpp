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

#include "mrpred/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "mrpred/errors.hpp"
#include "mrpred/reference.hpp"

namespace mrpred::analysis {

using dataset::MrKind;
using learn::ClassifierKind;

namespace {

std::uint64_t SplitMix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

long Hundredths(double v) { return std::lround(v * 100.0); }

}  // namespace

Ranking RankFeatures(const dataset::Dataset& ds, MrKind mr, int runs,
                     std::uint64_t seed, const learn::HyperParams& params) {
  if (runs < 1) throw ValidationError("runs must be >= 1");
  const std::vector<int> y = ds.LabelsFor(mr);
  std::vector<double> sum(ds.feature_names.size(), 0.0);
  for (int r = 0; r < runs; ++r) {
    learn::HyperParams p = params;
    p.seed = seed + static_cast<std::uint64_t>(r);
    learn::TrainedModel m =
        learn::Train(ClassifierKind::kRf, ds.rows, y, p, ds.feature_names);
    const auto& imp = m.FeatureImportances();
    for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += imp[j];
  }
  const double top = *std::max_element(sum.begin(), sum.end());
  Ranking ranking;
  for (std::size_t j = 0; j < sum.size(); ++j) {
    ranking.push_back(
        {ds.feature_names[j], sum[j] == top ? 1.0 : sum[j] / top});
  }
  std::stable_sort(ranking.begin(), ranking.end(),
                   [](const RankedFeature& a, const RankedFeature& b) {
                     return a.score > b.score;
                   });
  return ranking;
}

ImportanceTable BuildImportanceTable(const dataset::Dataset& ds, int runs,
                                     std::uint64_t seed,
                                     const learn::HyperParams& params) {
  ImportanceTable table;
  table.runs = runs;
  table.seed = seed;
  for (MrKind mr : dataset::kAllMrs) {
    try {
      table.per_mr[mr] = RankFeatures(ds, mr, runs, seed, params);
    } catch (const DegenerateData& e) {
      table.warnings.push_back(std::string(dataset::MrName(mr)) + ": " +
                               e.what());
    }
  }
  if (table.per_mr.empty()) {
    throw DegenerateData("no MR could be ranked");
  }
  for (const auto& name : ds.feature_names) {
    double total = 0.0;
    for (const auto& [mr, ranking] : table.per_mr) {
      for (const auto& f : ranking) {
        if (f.name == name) total += f.score;
      }
    }
    table.avg_row.push_back(
        {name, total / static_cast<double>(table.per_mr.size())});
  }
  std::stable_sort(table.avg_row.begin(), table.avg_row.end(),
                   [](const RankedFeature& a, const RankedFeature& b) {
                     return a.score > b.score;
                   });
  return table;
}

std::vector<std::string> TopFeatures(
    const Ranking& ranking, int n,
    const std::vector<std::string>& column_order) {
  if (n < 1 || static_cast<std::size_t>(n) > ranking.size()) {
    throw ValidationError("subset size " + std::to_string(n) +
                          " is outside 1.." + std::to_string(ranking.size()));
  }
  std::set<std::string> chosen;
  for (int i = 0; i < n; ++i)
    chosen.insert(ranking[static_cast<std::size_t>(i)].name);
  std::vector<std::string> out;
  for (const auto& name : column_order) {
    if (chosen.count(name)) out.push_back(name);
  }
  if (out.size() != chosen.size()) {
    throw UnknownFeature("ranking names a feature missing from the dataset");
  }
  return out;
}

SweepResult SweepSubsets(const dataset::Dataset& ds, MrKind mr,
                         const Ranking& ranking, std::uint64_t seed, int k,
                         const learn::HyperParams& params,
                         const std::vector<int>& sizes) {
  SweepResult out;
  out.mr = mr;
  out.subset_sizes = sizes;
  for (int n : sizes) {
    auto subset = TopFeatures(ranking, n, ds.feature_names);
    eval::EvalReport r = eval::CrossValidate(ds, mr, ClassifierKind::kRf,
                                             params, subset, k, seed);
    out.auc_by_size[n] = r.mean.auc_roc;
    out.precision_by_size[n] = r.mean.precision;
    out.reports.push_back(std::move(r));
  }
  return out;
}

std::uint64_t CellSeed(std::uint64_t seed, MrKind mr, ClassifierKind kind,
                       int size) {
  std::uint64_t h = SplitMix(seed);
  h = SplitMix(h ^ static_cast<std::uint64_t>(dataset::MrIndex(mr)));
  h = SplitMix(h ^ static_cast<std::uint64_t>(kind));
  h = SplitMix(h ^ static_cast<std::uint64_t>(size));
  return h;
}

GridResult GridEvaluate(const dataset::Dataset& ds,
                        const std::map<MrKind, Ranking>& rankings,
                        const std::vector<int>& sizes,
                        const std::vector<ClassifierKind>& kinds, int k,
                        std::uint64_t seed, const learn::HyperParams& params) {
  GridResult g;
  g.sizes = sizes;
  g.k = k;
  g.seed = seed;
  g.rankings = rankings;
  for (const auto& [mr, ranking] : rankings) {
    for (ClassifierKind kind : kinds) {
      for (int n : sizes) {
        const std::string cell = std::string(dataset::MrName(mr)) + "/" +
                                 std::string(learn::ClassifierName(kind)) +
                                 "/" + std::to_string(n);
        try {
          auto subset = TopFeatures(ranking, n, ds.feature_names);
          eval::EvalReport r = eval::CrossValidate(
              ds, mr, kind, params, subset, k, CellSeed(seed, mr, kind, n));
          for (const auto& w : r.warnings)
            g.warnings.push_back(cell + ": " + w);
          g.reports.push_back(std::move(r));
        } catch (const FoldError& e) {
          g.warnings.push_back(cell + ": " + e.what());
        } catch (const DegenerateData& e) {
          g.warnings.push_back(cell + ": " + e.what());
        }
      }
    }
  }
  return g;
}

std::string_view WinnerName(Winner w) {
  switch (w) {
    case Winner::kOurs:
      return "ours";
    case Winner::kBaseline:
      return "baseline";
    case Winner::kTie:
      return "tie";
  }
  return "?";
}

std::vector<ComparisonRow> CompareBaseline(
    const std::vector<eval::EvalReport>& grid, int size) {
  std::vector<ComparisonRow> rows;
  for (MrKind mr : dataset::kAllMrs) {
    ComparisonRow row;
    row.mr = mr;
    for (const auto& r : grid) {
      if (r.mr == mr && static_cast<int>(r.feature_subset.size()) == size) {
        row.ours[r.classifier] = r.mean.auc_roc;
      }
    }
    if (row.ours.empty()) {
      throw MissingCell("no " + std::to_string(size) + "-feature cell for " +
                        std::string(dataset::MrName(mr)));
    }
    bool first = true;
    for (ClassifierKind kind : learn::kAllClassifiers) {
      auto it = row.ours.find(kind);
      if (it == row.ours.end()) continue;
      if (first || it->second > row.best_ours) {
        row.best_ours = it->second;
        row.best_ours_kind = kind;
        first = false;
      }
    }
    const reference::BaselineAuc b = reference::Baseline(mr);
    row.nf_pf_svm = b.nf_pf_svm;
    row.gk_svm = b.gk_svm;
    row.rwk_svm = b.rwk_svm;
    row.best_baseline = "NF-PF";
    row.best_baseline_auc = b.nf_pf_svm;
    if (b.gk_svm > row.best_baseline_auc) {
      row.best_baseline = "GK";
      row.best_baseline_auc = b.gk_svm;
    }
    if (b.rwk_svm > row.best_baseline_auc) {
      row.best_baseline = "RWK";
      row.best_baseline_auc = b.rwk_svm;
    }
    const long ours = Hundredths(row.best_ours);
    const long theirs = Hundredths(row.best_baseline_auc);
    row.winner = ours > theirs   ? Winner::kOurs
                 : ours < theirs ? Winner::kBaseline
                                 : Winner::kTie;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace mrpred::analysis
