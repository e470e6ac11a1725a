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

// Importance ranking, top-n subset sweeps, the classifier grid and the
// comparison against the CFG-feature baselines.

#ifndef MRPRED_ANALYSIS_HPP_
#define MRPRED_ANALYSIS_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mrpred/dataset.hpp"
#include "mrpred/eval.hpp"
#include "mrpred/learn.hpp"

namespace mrpred::analysis {

struct RankedFeature {
  std::string name;
  double score = 0.0;

  bool operator==(const RankedFeature&) const = default;
};

using Ranking = std::vector<RankedFeature>;

// Fits `runs` forests on the full data (seeds seed .. seed + runs - 1),
// averages their importances, divides by the largest and sorts descending.
// Ties keep dataset column order. Throws DegenerateData.
Ranking RankFeatures(const dataset::Dataset& ds, dataset::MrKind mr, int runs,
                     std::uint64_t seed, const learn::HyperParams& params = {});

struct ImportanceTable {
  std::map<dataset::MrKind, Ranking> per_mr;
  int runs = 0;
  std::uint64_t seed = 0;
  Ranking avg_row;  // mean normalized score over the ranked MRs, sorted
  std::vector<std::string> warnings;
};

// Ranks every MR; an MR whose labels are single-class is skipped with a
// warning.
ImportanceTable BuildImportanceTable(const dataset::Dataset& ds, int runs,
                                     std::uint64_t seed,
                                     const learn::HyperParams& params = {});

// The `n` best-ranked names, listed in the dataset's column order.
std::vector<std::string> TopFeatures(
    const Ranking& ranking, int n,
    const std::vector<std::string>& column_order);

inline const std::vector<int> kSweepSizes = {3, 6, 9, 12, 15, 18, 21};

struct SweepResult {
  dataset::MrKind mr = dataset::MrKind::kAdd;
  std::vector<int> subset_sizes;
  std::map<int, double> auc_by_size;
  std::map<int, double> precision_by_size;
  std::vector<eval::EvalReport> reports;
};

// RF cross-validation on each top-n subset, all with the same seed.
SweepResult SweepSubsets(const dataset::Dataset& ds, dataset::MrKind mr,
                         const Ranking& ranking, std::uint64_t seed, int k = 10,
                         const learn::HyperParams& params = {},
                         const std::vector<int>& sizes = kSweepSizes);

struct GridResult {
  std::vector<int> sizes;
  int k = 10;
  std::uint64_t seed = 0;
  std::map<dataset::MrKind, Ranking> rankings;
  std::vector<eval::EvalReport> reports;
  std::vector<std::string> warnings;
};

// Stable per-cell seed derived from (seed, mr, kind, size) by splitmix64
// finalization of each component in turn.
std::uint64_t CellSeed(std::uint64_t seed, dataset::MrKind mr,
                       learn::ClassifierKind kind, int size);

// One cross-validation per (MR with a ranking, classifier, size). Cells that
// cannot be evaluated are reported as warnings.
GridResult GridEvaluate(const dataset::Dataset& ds,
                        const std::map<dataset::MrKind, Ranking>& rankings,
                        const std::vector<int>& sizes,
                        const std::vector<learn::ClassifierKind>& kinds, int k,
                        std::uint64_t seed,
                        const learn::HyperParams& params = {});

enum class Winner { kOurs, kBaseline, kTie };
std::string_view WinnerName(Winner w);

struct ComparisonRow {
  dataset::MrKind mr = dataset::MrKind::kAdd;
  std::map<learn::ClassifierKind, double> ours;  // mean AUC-ROC at the size
  learn::ClassifierKind best_ours_kind = learn::ClassifierKind::kRf;
  double best_ours = 0.0;
  double nf_pf_svm = 0.0;
  double gk_svm = 0.0;
  double rwk_svm = 0.0;
  std::string best_baseline;  // "NF-PF", "GK" or "RWK"
  double best_baseline_auc = 0.0;
  Winner winner = Winner::kBaseline;
};

// Best of our classifiers at `size` features against the three baseline
// SVMs, compared at two decimals. Throws MissingCell when an MR has no cell
// at `size`.
std::vector<ComparisonRow> CompareBaseline(
    const std::vector<eval::EvalReport>& grid, int size = 12);

nlohmann::json RankingToJson(const Ranking& r);
Ranking RankingFromJson(const nlohmann::json& j);
nlohmann::json ImportanceToJson(const ImportanceTable& t);
ImportanceTable ImportanceFromJson(const nlohmann::json& j);
nlohmann::json SweepToJson(const SweepResult& s);
nlohmann::json GridToJson(const GridResult& g);
GridResult GridFromJson(const nlohmann::json& j);
nlohmann::json ComparisonToJson(const std::vector<ComparisonRow>& rows);

struct ReportInputs {
  GridResult grid;
  std::optional<ImportanceTable> importance;
  std::string provenance;  // rendered verbatim under the title
};

// Markdown tables shaped like the importance, sweep, grid and comparison
// tables.
std::string RenderMarkdown(const ReportInputs& in);

// One row per MR: mr, NF-PF, GK, RWK, then our classifiers.
std::string RenderComparisonCsv(const std::vector<ComparisonRow>& rows);

}  // namespace mrpred::analysis

#endif  // MRPRED_ANALYSIS_HPP_
