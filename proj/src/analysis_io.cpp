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

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

#include "mrpred/analysis.hpp"
#include "mrpred/errors.hpp"

namespace mrpred::analysis {

using dataset::MrKind;
using learn::ClassifierKind;
using nlohmann::json;

namespace {

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string MrKey(MrKind mr) { return std::string(dataset::MrName(mr)); }

// Comparison table column order.
constexpr std::array<ClassifierKind, 5> kComparisonOrder = {
    ClassifierKind::kSvmLinear, ClassifierKind::kRf, ClassifierKind::kDt,
    ClassifierKind::kGnb, ClassifierKind::kLr};

ImportanceTable TableFromRankings(const std::map<MrKind, Ranking>& rankings) {
  ImportanceTable t;
  t.per_mr = rankings;
  if (rankings.empty()) return t;
  for (const auto& f : rankings.begin()->second) {
    double total = 0.0;
    for (const auto& [mr, r] : rankings) {
      for (const auto& g : r) {
        if (g.name == f.name) total += g.score;
      }
    }
    t.avg_row.push_back({f.name, total / static_cast<double>(rankings.size())});
  }
  std::stable_sort(t.avg_row.begin(), t.avg_row.end(),
                   [](const RankedFeature& a, const RankedFeature& b) {
                     return a.score > b.score;
                   });
  return t;
}

const eval::EvalReport* FindCell(const GridResult& g, MrKind mr,
                                 ClassifierKind kind, int size) {
  for (const auto& r : g.reports) {
    if (r.mr == mr && r.classifier == kind &&
        static_cast<int>(r.feature_subset.size()) == size) {
      return &r;
    }
  }
  return nullptr;
}

}  // namespace

json RankingToJson(const Ranking& r) {
  json a = json::array();
  for (const auto& f : r)
    a.push_back({{"feature", f.name}, {"score", f.score}});
  return a;
}

Ranking RankingFromJson(const json& j) {
  Ranking r;
  for (const auto& e : j) {
    r.push_back(
        {e.at("feature").get<std::string>(), e.at("score").get<double>()});
  }
  return r;
}

json ImportanceToJson(const ImportanceTable& t) {
  json per_mr = json::object();
  for (const auto& [mr, r] : t.per_mr) per_mr[MrKey(mr)] = RankingToJson(r);
  return {{"runs", t.runs},
          {"seed", t.seed},
          {"per_mr", per_mr},
          {"avg_row", RankingToJson(t.avg_row)},
          {"warnings", t.warnings}};
}

ImportanceTable ImportanceFromJson(const json& j) {
  try {
    ImportanceTable t;
    t.runs = j.at("runs").get<int>();
    t.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& [key, value] : j.at("per_mr").items()) {
      t.per_mr[dataset::ParseMr(key)] = RankingFromJson(value);
    }
    t.avg_row = RankingFromJson(j.at("avg_row"));
    t.warnings = j.value("warnings", std::vector<std::string>{});
    return t;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed importance document: ") +
                          e.what());
  }
}

json SweepToJson(const SweepResult& s) {
  json auc = json::object();
  json prec = json::object();
  for (int n : s.subset_sizes) {
    auc[std::to_string(n)] = s.auc_by_size.at(n);
    prec[std::to_string(n)] = s.precision_by_size.at(n);
  }
  json reports = json::array();
  for (const auto& r : s.reports) reports.push_back(eval::ReportToJson(r));
  return {{"mr", MrKey(s.mr)},
          {"subset_sizes", s.subset_sizes},
          {"auc_by_size", auc},
          {"precision_by_size", prec},
          {"reports", reports}};
}

json GridToJson(const GridResult& g) {
  json rankings = json::object();
  for (const auto& [mr, r] : g.rankings) rankings[MrKey(mr)] = RankingToJson(r);
  json cells = json::array();
  for (const auto& r : g.reports) cells.push_back(eval::ReportToJson(r));
  return {{"sizes", g.sizes},     {"k", g.k},       {"seed", g.seed},
          {"rankings", rankings}, {"cells", cells}, {"warnings", g.warnings}};
}

GridResult GridFromJson(const json& j) {
  try {
    GridResult g;
    g.sizes = j.at("sizes").get<std::vector<int>>();
    g.k = j.at("k").get<int>();
    g.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& [key, value] : j.at("rankings").items()) {
      g.rankings[dataset::ParseMr(key)] = RankingFromJson(value);
    }
    for (const auto& c : j.at("cells"))
      g.reports.push_back(eval::ReportFromJson(c));
    g.warnings = j.value("warnings", std::vector<std::string>{});
    return g;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed grid document: ") + e.what());
  }
}

json ComparisonToJson(const std::vector<ComparisonRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json ours = json::object();
    for (const auto& [kind, auc] : row.ours) {
      ours[std::string(learn::ClassifierName(kind))] = auc;
    }
    out.push_back(
        {{"mr", MrKey(row.mr)},
         {"ours", ours},
         {"best_ours",
          {{"classifier",
            std::string(learn::ClassifierName(row.best_ours_kind))},
           {"auc_roc", row.best_ours}}},
         {"baseline",
          {{"NF-PF", row.nf_pf_svm}, {"GK", row.gk_svm}, {"RWK", row.rwk_svm}}},
         {"best_baseline",
          {{"name", row.best_baseline}, {"auc_roc", row.best_baseline_auc}}},
         {"winner", std::string(WinnerName(row.winner))}});
  }
  return out;
}

std::string RenderMarkdown(const ReportInputs& in) {
  std::ostringstream md;
  md << "# mrpred report\n\n";
  if (!in.provenance.empty()) md << in.provenance << "\n\n";

  ImportanceTable importance =
      in.importance ? *in.importance : TableFromRankings(in.grid.rankings);
  md << "## Feature importance\n\n";
  if (importance.per_mr.empty()) {
    md << "No importance ranking available.\n\n";
  } else {
    md << "Normalized RF importance per MR (runs: " << importance.runs
       << ", seed: " << (in.importance ? importance.seed : in.grid.seed)
       << "). Columns follow the average ranking.\n\n| MR |";
    for (const auto& f : importance.avg_row) md << ' ' << f.name << " |";
    md << "\n|---|";
    for (std::size_t i = 0; i < importance.avg_row.size(); ++i) md << "---|";
    md << '\n';
    for (const auto& [mr, ranking] : importance.per_mr) {
      md << "| " << MrKey(mr) << " |";
      for (const auto& f : importance.avg_row) {
        double score = 0.0;
        for (const auto& g : ranking) {
          if (g.name == f.name) score = g.score;
        }
        md << ' ' << Fixed(score, 2) << " |";
      }
      md << '\n';
    }
    md << "| AVG |";
    for (const auto& f : importance.avg_row)
      md << ' ' << Fixed(f.score, 2) << " |";
    md << "\n\n";
  }

  const GridResult& g = in.grid;
  md << "## RF by subset size\n\nMean AUC-ROC and precision of RF over " << g.k
     << " folds (grid seed " << g.seed << ").\n\n| Metric | MR |";
  for (int n : g.sizes) md << " Feat" << n << " |";
  md << "\n|---|---|";
  for (std::size_t i = 0; i < g.sizes.size(); ++i) md << "---|";
  md << '\n';
  for (const char* metric : {"AUC-ROC", "Precision"}) {
    for (MrKind mr : dataset::kAllMrs) {
      if (!g.rankings.count(mr)) continue;
      md << "| " << metric << " | " << MrKey(mr) << " |";
      for (int n : g.sizes) {
        const auto* c = FindCell(g, mr, ClassifierKind::kRf, n);
        md << ' '
           << (c ? Fixed(std::string(metric) == "AUC-ROC" ? c->mean.auc_roc
                                                          : c->mean.precision,
                         3)
                 : std::string("-"))
           << " |";
      }
      md << '\n';
    }
  }
  md << '\n';

  md << "## Classifier grid\n\n| MR | Classifier |";
  static const std::array<const char*, 5> kMetricNames = {
      "Accuracy", "Precision", "Recall", "F1", "AUC-ROC"};
  for (const char* m : kMetricNames) {
    for (int n : g.sizes) md << ' ' << m << " Feat" << n << " |";
  }
  md << "\n|---|---|";
  for (std::size_t i = 0; i < kMetricNames.size() * g.sizes.size(); ++i)
    md << "---|";
  md << '\n';
  for (MrKind mr : dataset::kAllMrs) {
    for (ClassifierKind kind : learn::kAllClassifiers) {
      bool any = false;
      for (int n : g.sizes) any = any || FindCell(g, mr, kind, n) != nullptr;
      if (!any) continue;
      md << "| " << MrKey(mr) << " | " << learn::ClassifierName(kind) << " |";
      for (int metric = 0; metric < 5; ++metric) {
        for (int n : g.sizes) {
          const auto* c = FindCell(g, mr, kind, n);
          if (!c) {
            md << " - |";
            continue;
          }
          const eval::FoldMetrics& m = c->mean;
          const double v = metric == 0   ? m.accuracy
                           : metric == 1 ? m.precision
                           : metric == 2 ? m.recall
                           : metric == 3 ? m.f1
                                         : m.auc_roc;
          md << ' ' << Fixed(v, 3) << " |";
        }
      }
      md << '\n';
    }
  }
  md << '\n';

  md << "## Baseline comparison\n\n";
  try {
    auto rows = CompareBaseline(g.reports, 12);
    md << "AUC-ROC at 12 features against the CFG-feature SVM baselines, "
          "compared at two decimals.\n\n"
          "| MR | NF-PF SVM | GK SVM | RWK SVM | SVM | RF | DT | GNB | LR | "
          "Best | Winner |\n"
          "|---|---|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& row : rows) {
      md << "| " << MrKey(row.mr) << " | " << Fixed(row.nf_pf_svm, 2) << " | "
         << Fixed(row.gk_svm, 2) << " | " << Fixed(row.rwk_svm, 2) << " |";
      for (ClassifierKind kind : kComparisonOrder) {
        auto it = row.ours.find(kind);
        md << ' '
           << (it == row.ours.end() ? std::string("-") : Fixed(it->second, 2))
           << " |";
      }
      md << ' ' << learn::ClassifierName(row.best_ours_kind) << ' '
         << Fixed(row.best_ours, 2) << " vs " << row.best_baseline << ' '
         << Fixed(row.best_baseline_auc, 2) << " | " << WinnerName(row.winner)
         << " |\n";
    }
    md << '\n';
  } catch (const MissingCell& e) {
    md << "Not available: " << e.what() << ".\n\n";
  }

  if (!g.warnings.empty()) {
    md << "## Warnings\n\n";
    for (const auto& w : g.warnings) md << "- " << w << '\n';
    md << '\n';
  }
  return md.str();
}

std::string RenderComparisonCsv(const std::vector<ComparisonRow>& rows) {
  std::ostringstream out;
  out << "mr,NF-PF_SVM,GK_SVM,RWK_SVM,SVM,RF,DT,GNB,LR\n";
  for (const auto& row : rows) {
    out << MrKey(row.mr) << ',' << Fixed(row.nf_pf_svm, 2) << ','
        << Fixed(row.gk_svm, 2) << ',' << Fixed(row.rwk_svm, 2);
    for (ClassifierKind kind : kComparisonOrder) {
      auto it = row.ours.find(kind);
      out << ','
          << (it == row.ours.end() ? std::string() : Fixed(it->second, 3));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace mrpred::analysis
