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

#include "mrpred/cli.hpp"

#include <unistd.h>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mrpred/analysis.hpp"
#include "mrpred/dataset.hpp"
#include "mrpred/errors.hpp"
#include "mrpred/eval.hpp"
#include "mrpred/learn.hpp"
#include "mrpred/miner.hpp"

namespace mrpred::cli {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr std::string_view kSynopsis =
    "usage:\n"
    "  mrpred mine <path>... [--recursive] --out FILE\n"
    "  mrpred label --metrics FILE --labels FILE --out FILE\n"
    "  mrpred rank --dataset FILE [--runs N] [--seed N] --out FILE\n"
    "  mrpred sweep --dataset FILE [--seed N] --out FILE\n"
    "  mrpred grid --dataset FILE [--sizes LIST] [--folds N] [--seed N] --out "
    "FILE\n"
    "  mrpred evaluate --dataset FILE --mr MR --classifier {rf,dt,gnb,svm,lr}\n"
    "                  --features {all,top:N,list:a,b,c} [--folds N]\n"
    "                  [--repeated-holdout R:S --repeats N] [--seed N] --out "
    "FILE\n"
    "  mrpred report --grid FILE [--importance FILE] --out FILE\n";

constexpr int kRankRuns = 10;

std::uint64_t ParseSeed(const std::string& text, const std::string& origin) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ValidationError(origin + ": invalid seed '" + text + "'");
  }
  return v;
}

std::string QuoteArg(const std::string& a) {
  if (!a.empty() && a.find_first_of(" \t\"'\\$") == std::string::npos) return a;
  std::string q = "'";
  for (char c : a) {
    if (c == '\'') {
      q += "'\\''";
    } else {
      q.push_back(c);
    }
  }
  return q + "'";
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

json ReadJson(const std::string& path) {
  try {
    return json::parse(ReadFile(path));
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), 0, path);
  }
}

struct Context {
  std::string command_line;
  std::uint64_t seed = kDefaultSeed;
  bool verbose = false;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;

  ordered_json Provenance() const {
    ordered_json p;
    p["tool"] = "mrpred";
    p["version"] = std::string(kVersion);
    p["command_line"] = command_line;
    p["seed"] = seed;
    return p;
  }

  void Warn(const std::string& w) const { *err << "warning: " << w << '\n'; }
  void Log(const std::string& m) const {
    if (verbose) *err << m << '\n';
  }
};

std::string Dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json Ordered(const json& j) { return ordered_json::parse(j.dump()); }

// Fails early when `out` cannot be created or would overwrite an input.
void PreflightOutput(const std::string& out,
                     const std::vector<std::string>& inputs) {
  std::error_code ec;
  const fs::path target = fs::weakly_canonical(out, ec);
  for (const auto& in : inputs) {
    std::error_code ec2;
    if (!ec && fs::weakly_canonical(in, ec2) == target && !ec2) {
      throw UsageError("output path '" + out + "' is also an input");
    }
  }
  fs::path dir = fs::path(out).parent_path();
  if (dir.empty()) dir = ".";
  if (!fs::is_directory(dir, ec)) {
    throw UsageError("output directory does not exist: " + dir.string());
  }
  if (::access(dir.c_str(), W_OK) != 0) {
    throw UsageError("output directory is not writable: " + dir.string());
  }
  if (fs::is_directory(out, ec))
    throw UsageError("output path is a directory: " + out);
}

std::string SidecarPath(const std::string& out) {
  return out + ".provenance.json";
}

dataset::Dataset LoadDataset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  return dataset::LoadLabeledCsv(in);
}

std::vector<int> ParseSizes(const std::string& list) {
  std::vector<int> sizes;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() ||
        v < 1) {
      throw ValidationError("invalid subset size '" + item + "' in --sizes");
    }
    sizes.push_back(v);
  }
  if (sizes.empty()) throw ValidationError("--sizes is empty");
  return sizes;
}

int CmdMine(const Context& ctx, const std::vector<std::string>& paths,
            bool recursive, const std::string& out) {
  PreflightOutput(out, paths);
  miner::MineResult result = miner::MinePaths(paths, recursive);
  for (const auto& w : result.warnings) ctx.Warn(w);
  std::ostringstream csv;
  miner::WriteMetricsCsv(csv, result.methods);
  WriteFileAtomic(out, csv.str());
  bool best_effort = false;
  for (const auto& m : result.methods) {
    best_effort = best_effort || m.method.language != miner::Language::kJava;
  }
  ordered_json side = ctx.Provenance();
  side["artifact"] = fs::path(out).filename().string();
  side["files_mined"] = result.files_mined;
  side["methods"] = result.methods.size();
  side["best_effort_languages"] = best_effort;
  side["warnings"] = result.warnings;
  WriteFileAtomic(SidecarPath(out), Dump(side));
  ctx.Log("mined " + std::to_string(result.methods.size()) + " methods from " +
          std::to_string(result.files_mined) + " files");
  return 0;
}

int CmdLabel(const Context& ctx, const std::string& metrics_path,
             const std::string& labels_path, const std::string& out) {
  PreflightOutput(out, {metrics_path, labels_path});
  std::ifstream min(metrics_path, std::ios::binary);
  if (!min) throw IoError("cannot read " + metrics_path);
  std::ifstream lin(labels_path, std::ios::binary);
  if (!lin) throw IoError("cannot read " + labels_path);
  auto metrics = dataset::LoadMetrics(min);
  auto labels = dataset::LoadLabels(lin);
  std::vector<std::string> warnings;
  dataset::Dataset ds = dataset::BuildDataset(metrics, labels, &warnings);
  for (const auto& w : warnings) ctx.Warn(w);
  std::ostringstream csv;
  dataset::WriteLabeledCsv(csv, metrics, labels);
  WriteFileAtomic(out, csv.str());
  ordered_json side = ctx.Provenance();
  side["artifact"] = fs::path(out).filename().string();
  side["methods"] = ds.size();
  ordered_json sums = ordered_json::object();
  for (auto mr : dataset::kAllMrs) {
    int s = 0;
    for (int v : ds.LabelsFor(mr)) s += v;
    sums[std::string(dataset::MrName(mr))] = s;
  }
  side["label_counts"] = sums;
  side["warnings"] = warnings;
  WriteFileAtomic(SidecarPath(out), Dump(side));
  return 0;
}

int CmdRank(const Context& ctx, const std::string& ds_path, int runs,
            const std::string& out) {
  PreflightOutput(out, {ds_path});
  dataset::Dataset ds = LoadDataset(ds_path);
  analysis::ImportanceTable t =
      analysis::BuildImportanceTable(ds, runs, ctx.seed);
  for (const auto& w : t.warnings) ctx.Warn(w);
  ordered_json doc = ctx.Provenance();
  doc.update(Ordered(analysis::ImportanceToJson(t)));
  WriteFileAtomic(out, Dump(doc));
  return 0;
}

int CmdSweep(const Context& ctx, const std::string& ds_path,
             const std::string& out) {
  PreflightOutput(out, {ds_path});
  dataset::Dataset ds = LoadDataset(ds_path);
  analysis::ImportanceTable t =
      analysis::BuildImportanceTable(ds, kRankRuns, ctx.seed);
  ordered_json doc = ctx.Provenance();
  doc["k"] = 10;
  doc["runs"] = kRankRuns;
  ordered_json sweeps = ordered_json::array();
  std::vector<std::string> warnings = t.warnings;
  for (const auto& [mr, ranking] : t.per_mr) {
    ctx.Log("sweeping " + std::string(dataset::MrName(mr)));
    try {
      std::vector<int> sizes;
      for (int n : analysis::kSweepSizes) {
        if (n <= static_cast<int>(ranking.size())) sizes.push_back(n);
      }
      auto s = analysis::SweepSubsets(ds, mr, ranking, ctx.seed, 10, {}, sizes);
      ordered_json j = Ordered(analysis::SweepToJson(s));
      j["ranking"] = Ordered(analysis::RankingToJson(ranking));
      sweeps.push_back(j);
    } catch (const FoldError& e) {
      warnings.push_back(std::string(dataset::MrName(mr)) + ": " + e.what());
    }
  }
  for (const auto& w : warnings) ctx.Warn(w);
  doc["sweeps"] = sweeps;
  doc["warnings"] = warnings;
  WriteFileAtomic(out, Dump(doc));
  return 0;
}

int CmdGrid(const Context& ctx, const std::string& ds_path,
            const std::string& sizes_text, int folds, const std::string& out) {
  PreflightOutput(out, {ds_path});
  std::vector<int> sizes = ParseSizes(sizes_text);
  dataset::Dataset ds = LoadDataset(ds_path);
  for (int n : sizes) {
    if (n > static_cast<int>(ds.feature_names.size())) {
      throw ValidationError(
          "subset size " + std::to_string(n) + " exceeds the " +
          std::to_string(ds.feature_names.size()) + " features");
    }
  }
  analysis::ImportanceTable t =
      analysis::BuildImportanceTable(ds, kRankRuns, ctx.seed);
  std::vector<learn::ClassifierKind> kinds(learn::kAllClassifiers.begin(),
                                           learn::kAllClassifiers.end());
  analysis::GridResult g =
      analysis::GridEvaluate(ds, t.per_mr, sizes, kinds, folds, ctx.seed);
  g.warnings.insert(g.warnings.begin(), t.warnings.begin(), t.warnings.end());
  for (const auto& w : g.warnings) ctx.Warn(w);
  ordered_json doc = ctx.Provenance();
  doc["runs"] = kRankRuns;
  doc.update(Ordered(analysis::GridToJson(g)));
  WriteFileAtomic(out, Dump(doc));
  return 0;
}

std::vector<std::string> ResolveFeatures(const Context& ctx,
                                         const dataset::Dataset& ds,
                                         dataset::MrKind mr,
                                         const std::string& spec) {
  if (spec == "all") return ds.feature_names;
  if (spec.rfind("top:", 0) == 0) {
    const std::string num = spec.substr(4);
    int n = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
    if (num.empty() || ec != std::errc() || ptr != num.data() + num.size()) {
      throw ValidationError("invalid --features value '" + spec + "'");
    }
    auto ranking = analysis::RankFeatures(ds, mr, kRankRuns, ctx.seed);
    return analysis::TopFeatures(ranking, n, ds.feature_names);
  }
  if (spec.rfind("list:", 0) == 0) {
    std::vector<std::string> names;
    std::stringstream ss(spec.substr(5));
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty())
        throw ValidationError("empty feature name in --features");
      ds.FeatureIndex(item);
      names.push_back(item);
    }
    if (names.empty()) throw ValidationError("--features list is empty");
    return names;
  }
  throw ValidationError("invalid --features value '" + spec +
                        "'; expected all, top:N or list:a,b,c");
}

int CmdEvaluate(const Context& ctx, const std::string& ds_path,
                const std::string& mr_text, const std::string& clf_text,
                const std::string& features, int folds,
                const std::string& holdout, int repeats,
                const std::string& out) {
  const dataset::MrKind mr = dataset::ParseMr(mr_text);
  const learn::ClassifierKind kind = learn::ParseClassifier(clf_text);
  PreflightOutput(out, {ds_path});
  dataset::Dataset ds = LoadDataset(ds_path);
  std::vector<std::string> subset = ResolveFeatures(ctx, ds, mr, features);
  eval::EvalReport report;
  if (!holdout.empty()) {
    auto colon = holdout.find(':');
    double r = 0, s = 0;
    try {
      if (colon == std::string::npos) throw std::invalid_argument("");
      std::size_t used = 0;
      r = std::stod(holdout.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument("");
      const std::string rest = holdout.substr(colon + 1);
      s = std::stod(rest, &used);
      if (used != rest.size()) throw std::invalid_argument("");
    } catch (const std::logic_error&) {
      throw ValidationError("invalid --repeated-holdout '" + holdout +
                            "'; expected R:S such as 70:30");
    }
    if (!(r > 0 && s > 0)) {
      throw ValidationError("--repeated-holdout parts must be positive");
    }
    report = eval::RepeatedHoldout(ds, mr, kind, {}, subset, r / (r + s),
                                   repeats, ctx.seed);
  } else {
    report = eval::CrossValidate(ds, mr, kind, {}, subset, folds, ctx.seed);
  }
  for (const auto& w : report.warnings) ctx.Warn(w);
  ordered_json doc = ctx.Provenance();
  doc.update(Ordered(eval::ReportToJson(report)));
  WriteFileAtomic(out, Dump(doc));
  return 0;
}

int CmdReport(const Context& ctx, const std::string& grid_path,
              const std::string& importance_path, const std::string& out) {
  std::vector<std::string> inputs = {grid_path};
  if (!importance_path.empty()) inputs.push_back(importance_path);
  PreflightOutput(out, inputs);
  const json grid_doc = ReadJson(grid_path);
  analysis::ReportInputs in;
  in.grid = analysis::GridFromJson(grid_doc);
  if (!importance_path.empty()) {
    in.importance = analysis::ImportanceFromJson(ReadJson(importance_path));
  }
  std::ostringstream prov;
  prov << "- tool: mrpred " << kVersion << "\n"
       << "- command line: `" << ctx.command_line << "`\n"
       << "- seed: " << ctx.seed << "\n"
       << "- grid seed: " << in.grid.seed << " (command line: `"
       << grid_doc.value("command_line", std::string("unknown")) << "`)";
  if (in.importance) prov << "\n- importance seed: " << in.importance->seed;
  in.provenance = prov.str();
  WriteFileAtomic(out, analysis::RenderMarkdown(in));

  fs::path csv_path = fs::path(out);
  csv_path.replace_extension(".comparison.csv");
  try {
    auto rows = analysis::CompareBaseline(in.grid.reports, 12);
    WriteFileAtomic(csv_path.string(), analysis::RenderComparisonCsv(rows));
    ordered_json side = ctx.Provenance();
    side["artifact"] = csv_path.filename().string();
    side["grid_seed"] = in.grid.seed;
    side["comparison"] = Ordered(analysis::ComparisonToJson(rows));
    WriteFileAtomic(SidecarPath(csv_path.string()), Dump(side));
  } catch (const MissingCell& e) {
    ctx.Warn(std::string("comparison series not written: ") + e.what());
  }
  return 0;
}

}  // namespace

void WriteFileAtomic(const std::string& path, std::string_view content) {
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot write " + tmp);
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError("cannot write " + tmp);
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot replace " + path);
  }
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Context ctx;
  ctx.out = &out;
  ctx.err = &err;
  {
    std::string line = "mrpred";
    for (std::size_t i = 1; i < args.size(); ++i)
      line += " " + QuoteArg(args[i]);
    ctx.command_line = line;
  }

  CLI::App app{"Predict metamorphic relations from source-code metrics."};
  app.name("mrpred");
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "Progress messages on stderr");

  std::optional<std::uint64_t> seed_flag;
  std::string out_path;
  std::vector<std::string> paths;
  bool recursive = false;
  std::string metrics_path, labels_path, dataset_path, grid_path,
      importance_path;
  int runs = kRankRuns;
  std::string sizes = "3,12,21";
  int folds = 10;
  std::string mr, classifier, features, holdout;
  int repeats = 10;

  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", seed_flag,
                    "Random seed (default 42 or $MRPRED_SEED)");
  };

  CLI::App* mine = app.add_subcommand("mine", "Mine method metrics to CSV");
  mine->add_option("paths", paths, "Files or directories")->required();
  mine->add_flag("--recursive", recursive, "Descend into subdirectories");
  mine->add_option("--out", out_path)->required();

  CLI::App* label = app.add_subcommand("label", "Join metrics with MR labels");
  label->add_option("--metrics", metrics_path)->required();
  label->add_option("--labels", labels_path)->required();
  label->add_option("--out", out_path)->required();

  CLI::App* rank = app.add_subcommand("rank", "Rank features by RF importance");
  rank->add_option("--dataset", dataset_path)->required();
  rank->add_option("--runs", runs)->check(CLI::PositiveNumber);
  add_seed(rank);
  rank->add_option("--out", out_path)->required();

  CLI::App* sweep = app.add_subcommand("sweep", "RF top-n subset sweep");
  sweep->add_option("--dataset", dataset_path)->required();
  add_seed(sweep);
  sweep->add_option("--out", out_path)->required();

  CLI::App* grid =
      app.add_subcommand("grid", "Evaluate every classifier and size");
  grid->add_option("--dataset", dataset_path)->required();
  grid->add_option("--sizes", sizes);
  grid->add_option("--folds", folds)->check(CLI::Range(2, 1000));
  add_seed(grid);
  grid->add_option("--out", out_path)->required();

  CLI::App* evaluate =
      app.add_subcommand("evaluate", "Cross-validate one model");
  evaluate->add_option("--dataset", dataset_path)->required();
  evaluate->add_option("--mr", mr)->required();
  evaluate->add_option("--classifier", classifier)->required();
  evaluate->add_option("--features", features)->required();
  evaluate->add_option("--folds", folds)->check(CLI::Range(2, 1000));
  CLI::Option* holdout_opt =
      evaluate->add_option("--repeated-holdout", holdout);
  evaluate->add_option("--repeats", repeats)
      ->check(CLI::PositiveNumber)
      ->needs(holdout_opt);
  add_seed(evaluate);
  evaluate->add_option("--out", out_path)->required();

  CLI::App* report = app.add_subcommand("report", "Render Markdown tables");
  report->add_option("--grid", grid_path)->required();
  report->add_option("--importance", importance_path);
  report->add_option("--out", out_path)->required();

  std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1),
                                     args.end());
  std::reverse(argv_tail.begin(), argv_tail.end());
  try {
    app.parse(argv_tail);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << kSynopsis;
    return 1;
  }
  ctx.verbose = verbose;

  try {
    if (const char* env = std::getenv("MRPRED_SEED"); env != nullptr && *env) {
      ctx.seed = ParseSeed(env, "MRPRED_SEED");
    }
    if (seed_flag) ctx.seed = *seed_flag;

    if (*mine) return CmdMine(ctx, paths, recursive, out_path);
    if (*label) return CmdLabel(ctx, metrics_path, labels_path, out_path);
    if (*rank) return CmdRank(ctx, dataset_path, runs, out_path);
    if (*sweep) return CmdSweep(ctx, dataset_path, out_path);
    if (*grid) return CmdGrid(ctx, dataset_path, sizes, folds, out_path);
    if (*evaluate) {
      return CmdEvaluate(ctx, dataset_path, mr, classifier, features, folds,
                         holdout, repeats, out_path);
    }
    if (*report) return CmdReport(ctx, grid_path, importance_path, out_path);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << kSynopsis;
    return 1;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
  err << kSynopsis;
  return 1;
}

int Run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv, argv + argc);
  return Run(args, std::cout, std::cerr);
}

}  // namespace mrpred::cli
