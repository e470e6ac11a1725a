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
#include <filesystem>
#include <set>
#include <system_error>

#include "mrpred/csv.hpp"
#include "mrpred/errors.hpp"
#include "mrpred/miner.hpp"

namespace mrpred::miner {

namespace fs = std::filesystem;

namespace {

void CollectDirectory(const fs::path& dir, bool recursive,
                      std::vector<std::string>& files,
                      std::vector<std::string>& warnings) {
  std::error_code ec;
  std::vector<fs::path> entries;
  if (recursive) {
    for (fs::recursive_directory_iterator it(dir, ec), end; !ec && it != end;
         it.increment(ec)) {
      if (it->is_regular_file(ec)) entries.push_back(it->path());
    }
  } else {
    for (fs::directory_iterator it(dir, ec), end; !ec && it != end;
         it.increment(ec)) {
      if (it->is_regular_file(ec)) entries.push_back(it->path());
    }
  }
  if (ec) warnings.push_back(dir.string() + ": " + ec.message());
  for (const auto& p : entries) {
    if (LanguageFromPath(p.string())) files.push_back(p.generic_string());
  }
}

}  // namespace

MineResult MinePaths(const std::vector<std::string>& paths, bool recursive) {
  MineResult result;
  std::vector<std::string> files;
  for (const auto& raw : paths) {
    fs::path p(raw);
    std::error_code ec;
    if (fs::is_directory(p, ec)) {
      CollectDirectory(p, recursive, files, result.warnings);
    } else if (fs::exists(p, ec)) {
      if (LanguageFromPath(raw)) {
        files.push_back(p.generic_string());
      } else {
        result.warnings.push_back(raw + ": unrecognized extension, skipped");
      }
    } else {
      result.warnings.push_back(raw + ": no such file or directory");
    }
  }
  std::sort(files.begin(), files.end());

  std::set<std::string> seen;
  for (const auto& path : files) {
    std::error_code ec;
    fs::path canonical = fs::weakly_canonical(path, ec);
    if (!seen.insert(ec ? path : canonical.string()).second) continue;
    try {
      SourceFile file = SourceFile::Load(path);
      LexResult lexed = Lex(file);
      for (auto& method : SegmentMethods(file, lexed)) {
        MetricVector metrics = ComputeMetrics(method, file, lexed);
        result.methods.push_back({std::move(method), std::move(metrics), path});
      }
      ++result.files_mined;
    } catch (const Error& e) {
      result.warnings.push_back(path + ": " + e.what());
    }
  }
  if (result.files_mined == 0) throw IoError("no minable files");
  std::stable_sort(result.methods.begin(), result.methods.end(),
                   [](const MinedMethod& a, const MinedMethod& b) {
                     if (a.path != b.path) return a.path < b.path;
                     return a.method.start_line < b.method.start_line;
                   });
  return result;
}

const std::vector<std::string>& MetricsCsvHeader() {
  static const std::vector<std::string> kHeader = {
      "method_id",     "name",
      "ext",           "start_line",
      "end_line",      "tloc",
      "sloc_whbl",     "nloc",
      "nloc_whbl",     "sloc_statements",
      "token_count",   "full_parameters",
      "numArg",        "dataArg",
      "numOper",       "numOperands",
      "total_Var",     "numLoops",
      "CCN",           "numMethCall",
      "has_return",    "totalReturn",
      "returnDataType"};
  return kHeader;
}

void WriteMetricsCsv(std::ostream& out, const std::vector<MinedMethod>& rows) {
  csv::WriteRow(out, MetricsCsvHeader());
  for (const auto& r : rows) {
    const MetricVector& m = r.metrics;
    auto n = [](int v) { return std::to_string(v); };
    csv::WriteRow(out, {csv::Quote(r.method.method_id),
                        csv::Quote(r.method.name),
                        csv::Quote(m.ext),
                        n(m.start_line),
                        n(m.end_line),
                        n(m.tloc),
                        n(m.sloc_whbl),
                        n(m.nloc),
                        n(m.nloc_whbl),
                        n(m.sloc_statements),
                        n(m.token_count),
                        csv::Quote(m.full_parameters),
                        n(m.num_arg),
                        csv::Quote(m.data_arg),
                        n(m.num_oper),
                        n(m.num_operands),
                        n(m.total_var),
                        n(m.num_loops),
                        n(m.ccn),
                        n(m.num_meth_call),
                        n(m.has_return),
                        n(m.total_return),
                        csv::Quote(m.return_data_type)});
  }
}

}  // namespace mrpred::miner
