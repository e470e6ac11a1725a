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

#include "mrpred/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <unordered_map>

#include "mrpred/csv.hpp"
#include "mrpred/errors.hpp"

namespace mrpred::dataset {

namespace {

constexpr std::array<std::string_view, 6> kMrNames = {"ADD", "EXC", "INC",
                                                      "MUL", "PER", "INV"};

int ParseInt(const std::string& cell, std::size_t row,
             const std::string& column) {
  int value = 0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (cell.empty() || ec != std::errc() || ptr != last) {
    throw ParseError("expected an integer, got '" + cell + "'", row, column);
  }
  return value;
}

void CheckHeader(const csv::Row& header,
                 const std::vector<std::string>& expected) {
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i >= header.size()) {
      throw SchemaError("missing column '" + expected[i] + "'");
    }
    if (header[i] != expected[i]) {
      throw SchemaError("expected column '" + expected[i] + "' at position " +
                        std::to_string(i + 1) + ", found '" + header[i] + "'");
    }
  }
  if (header.size() > expected.size()) {
    throw SchemaError("unexpected column '" + header[expected.size()] + "'");
  }
}

std::vector<std::string> LabeledHeader() {
  std::vector<std::string> header = miner::MetricsCsvHeader();
  for (auto name : kMrNames) header.emplace_back(name);
  return header;
}

MetricsRow ParseMetricsCells(const csv::Row& cells, std::size_t row,
                             const std::vector<std::string>& header) {
  auto num = [&](std::size_t col) {
    return ParseInt(cells[col], row, header[col]);
  };
  MetricsRow r;
  r.method_id = cells[0];
  r.name = cells[1];
  miner::MetricVector& m = r.metrics;
  m.ext = cells[2];
  m.start_line = num(3);
  m.end_line = num(4);
  m.tloc = num(5);
  m.sloc_whbl = num(6);
  m.nloc = num(7);
  m.nloc_whbl = num(8);
  m.sloc_statements = num(9);
  m.token_count = num(10);
  m.full_parameters = cells[11];
  m.num_arg = num(12);
  m.data_arg = cells[13];
  m.num_oper = num(14);
  m.num_operands = num(15);
  m.total_var = num(16);
  m.num_loops = num(17);
  m.ccn = num(18);
  m.num_meth_call = num(19);
  m.has_return = num(20);
  m.total_return = num(21);
  m.return_data_type = cells[22];
  return r;
}

void CheckWidth(const csv::Row& cells, std::size_t width, std::size_t row,
                const std::vector<std::string>& header) {
  if (cells.size() < width) {
    throw ParseError("row has " + std::to_string(cells.size()) +
                         " cells, expected " + std::to_string(width),
                     row, header[cells.size()]);
  }
  if (cells.size() > width) {
    throw ParseError("row has extra cells", row, std::to_string(width + 1));
  }
}

// Feature values in FeatureNames() order, categoricals as raw strings.
struct RawFeatures {
  std::array<double, 21> numeric{};
  std::array<const std::string*, 21> text{};
};

RawFeatures Raw(const miner::MetricVector& m) {
  RawFeatures r;
  auto set_num = [&](int i, int v) { r.numeric[i] = v; };
  r.text[0] = &m.ext;
  set_num(1, m.start_line);
  set_num(2, m.end_line);
  set_num(3, m.tloc);
  set_num(4, m.sloc_whbl);
  set_num(5, m.nloc);
  set_num(6, m.nloc_whbl);
  set_num(7, m.sloc_statements);
  set_num(8, m.token_count);
  r.text[9] = &m.full_parameters;
  set_num(10, m.num_arg);
  r.text[11] = &m.data_arg;
  set_num(12, m.num_oper);
  set_num(13, m.num_operands);
  set_num(14, m.total_var);
  set_num(15, m.num_loops);
  set_num(16, m.ccn);
  set_num(17, m.num_meth_call);
  set_num(18, m.has_return);
  set_num(19, m.total_return);
  r.text[20] = &m.return_data_type;
  return r;
}

}  // namespace

std::string_view MrName(MrKind mr) { return kMrNames[MrIndex(mr)]; }

MrKind ParseMr(std::string_view name) {
  std::string upper(name);
  for (char& c : upper) c = static_cast<char>(std::toupper(c));
  for (std::size_t i = 0; i < kMrNames.size(); ++i) {
    if (upper == kMrNames[i]) return kAllMrs[i];
  }
  throw ValidationError("unknown MR '" + std::string(name) +
                        "'; valid MRs: ADD, EXC, INC, MUL, PER, INV");
}

const std::vector<std::string>& FeatureNames() {
  static const std::vector<std::string> kNames(
      miner::MetricsCsvHeader().begin() + 2, miner::MetricsCsvHeader().end());
  return kNames;
}

bool IsCategorical(std::string_view feature) {
  return feature == "ext" || feature == "full_parameters" ||
         feature == "dataArg" || feature == "returnDataType";
}

int Encoders::Fit(const std::string& feature, const std::string& value) {
  auto& table = tables_[feature];
  auto it = std::find(table.begin(), table.end(), value);
  if (it != table.end()) return static_cast<int>(it - table.begin());
  table.push_back(value);
  return static_cast<int>(table.size()) - 1;
}

int Encoders::Encode(const std::string& feature,
                     const std::string& value) const {
  auto t = tables_.find(feature);
  if (t == tables_.end()) return -1;
  auto it = std::find(t->second.begin(), t->second.end(), value);
  return it == t->second.end() ? -1 : static_cast<int>(it - t->second.begin());
}

const std::string& Encoders::Decode(const std::string& feature,
                                    int code) const {
  auto t = tables_.find(feature);
  if (t == tables_.end() || code < 0 ||
      static_cast<std::size_t>(code) >= t->second.size()) {
    throw ValueError("no category " + std::to_string(code) + " for " + feature);
  }
  return t->second[static_cast<std::size_t>(code)];
}

std::vector<int> Dataset::LabelsFor(MrKind mr) const {
  std::vector<int> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(l[MrIndex(mr)]);
  return out;
}

std::size_t Dataset::FeatureIndex(const std::string& name) const {
  auto it = std::find(feature_names.begin(), feature_names.end(), name);
  if (it == feature_names.end())
    throw UnknownFeature("unknown feature '" + name + "'");
  return static_cast<std::size_t>(it - feature_names.begin());
}

std::vector<MetricsRow> LoadMetrics(std::istream& in) {
  auto records = csv::ReadAll(in);
  const auto& header = miner::MetricsCsvHeader();
  if (records.empty()) throw SchemaError("missing header row");
  CheckHeader(records[0], header);
  std::vector<MetricsRow> rows;
  for (std::size_t r = 1; r < records.size(); ++r) {
    CheckWidth(records[r], header.size(), r, header);
    rows.push_back(ParseMetricsCells(records[r], r, header));
  }
  return rows;
}

std::vector<LabeledMethod> LoadLabels(std::istream& in) {
  auto records = csv::ReadAll(in);
  std::vector<std::string> header = {"method_id"};
  for (auto name : kMrNames) header.emplace_back(name);
  if (records.empty()) throw SchemaError("missing header row");
  CheckHeader(records[0], header);
  std::vector<LabeledMethod> out;
  std::set<std::string> seen;
  for (std::size_t r = 1; r < records.size(); ++r) {
    CheckWidth(records[r], header.size(), r, header);
    LabeledMethod m;
    m.method_id = records[r][0];
    if (!seen.insert(m.method_id).second) {
      throw ValueError("duplicate label row for '" + m.method_id + "'");
    }
    for (std::size_t k = 0; k < 6; ++k) {
      const std::string& cell = records[r][k + 1];
      if (cell != "0" && cell != "1") {
        throw ValueError("row " + std::to_string(r) + ", column '" +
                         header[k + 1] + "': label must be 0 or 1, got '" +
                         cell + "'");
      }
      m.labels[k] = cell == "1" ? 1 : 0;
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<MetricsRow> ToMetricsRows(
    const std::vector<miner::MinedMethod>& mined) {
  std::vector<MetricsRow> out;
  out.reserve(mined.size());
  for (const auto& m : mined) {
    out.push_back({m.method.method_id, m.method.name, m.metrics});
  }
  return out;
}

Dataset BuildDataset(const std::vector<MetricsRow>& metrics,
                     const std::vector<LabeledMethod>& labels,
                     std::vector<std::string>* warnings) {
  std::unordered_map<std::string, const LabeledMethod*> by_id;
  for (const auto& l : labels) by_id[l.method_id] = &l;
  std::set<std::string> mined_ids;
  for (const auto& m : metrics) mined_ids.insert(m.method_id);
  std::vector<std::string> missing;
  for (const auto& l : labels) {
    if (!mined_ids.count(l.method_id)) missing.push_back(l.method_id);
  }
  if (!missing.empty()) {
    std::string list;
    for (const auto& id : missing) list += (list.empty() ? "" : ", ") + id;
    throw JoinError("labeled methods missing from metrics: " + list);
  }

  Dataset ds;
  ds.feature_names = FeatureNames();
  std::vector<const MetricsRow*> kept;
  std::set<std::string> used;
  for (const auto& m : metrics) {
    if (!by_id.count(m.method_id)) {
      if (warnings)
        warnings->push_back("no labels for '" + m.method_id + "', dropped");
      continue;
    }
    if (!used.insert(m.method_id).second) {
      if (warnings)
        warnings->push_back("duplicate metrics row for '" + m.method_id +
                            "', dropped");
      continue;
    }
    kept.push_back(&m);
  }
  const std::size_t d = ds.feature_names.size();
  ds.rows.resize(static_cast<Eigen::Index>(kept.size()),
                 static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < kept.size(); ++i) {
    RawFeatures raw = Raw(kept[i]->metrics);
    for (std::size_t f = 0; f < d; ++f) {
      double v = raw.text[f] != nullptr
                     ? ds.encoders.Fit(ds.feature_names[f], *raw.text[f])
                     : raw.numeric[f];
      ds.rows(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(f)) = v;
    }
    ds.method_ids.push_back(kept[i]->method_id);
    ds.labels.push_back(by_id[kept[i]->method_id]->labels);
  }
  return ds;
}

Eigen::RowVectorXd EncodeRow(const Dataset& ds,
                             const miner::MetricVector& metrics) {
  RawFeatures raw = Raw(metrics);
  const auto& all = FeatureNames();
  Eigen::RowVectorXd row(static_cast<Eigen::Index>(ds.feature_names.size()));
  for (std::size_t c = 0; c < ds.feature_names.size(); ++c) {
    const std::string& name = ds.feature_names[c];
    auto f = static_cast<std::size_t>(std::find(all.begin(), all.end(), name) -
                                      all.begin());
    if (f == all.size()) throw UnknownFeature("unknown feature '" + name + "'");
    row(static_cast<Eigen::Index>(c)) =
        raw.text[f] != nullptr ? ds.encoders.Encode(name, *raw.text[f])
                               : raw.numeric[f];
  }
  return row;
}

Dataset SelectFeatures(const Dataset& ds,
                       const std::vector<std::string>& names) {
  std::vector<std::size_t> cols;
  for (const auto& n : names) cols.push_back(ds.FeatureIndex(n));
  Dataset out;
  out.feature_names = names;
  out.rows.resize(ds.rows.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    out.rows.col(static_cast<Eigen::Index>(c)) =
        ds.rows.col(static_cast<Eigen::Index>(cols[c]));
  }
  out.labels = ds.labels;
  out.method_ids = ds.method_ids;
  out.encoders = ds.encoders;
  return out;
}

void WriteLabeledCsv(std::ostream& out, const std::vector<MetricsRow>& metrics,
                     const std::vector<LabeledMethod>& labels) {
  std::unordered_map<std::string, const LabeledMethod*> by_id;
  for (const auto& l : labels) by_id[l.method_id] = &l;
  csv::WriteRow(out, LabeledHeader());
  std::set<std::string> used;
  for (const auto& r : metrics) {
    auto it = by_id.find(r.method_id);
    if (it == by_id.end() || !used.insert(r.method_id).second) continue;
    const miner::MetricVector& m = r.metrics;
    auto n = [](int v) { return std::to_string(v); };
    csv::Row row = {csv::Quote(r.method_id),
                    csv::Quote(r.name),
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
                    csv::Quote(m.return_data_type)};
    for (int bit : it->second->labels) row.push_back(n(bit));
    csv::WriteRow(out, row);
  }
}

Dataset LoadLabeledCsv(std::istream& in) {
  auto records = csv::ReadAll(in);
  const std::vector<std::string> header = LabeledHeader();
  if (records.empty()) throw SchemaError("missing header row");
  CheckHeader(records[0], header);
  std::vector<MetricsRow> metrics;
  std::vector<LabeledMethod> labels;
  const std::size_t base = miner::MetricsCsvHeader().size();
  for (std::size_t r = 1; r < records.size(); ++r) {
    CheckWidth(records[r], header.size(), r, header);
    metrics.push_back(ParseMetricsCells(records[r], r, header));
    LabeledMethod l;
    l.method_id = metrics.back().method_id;
    for (std::size_t k = 0; k < 6; ++k) {
      const std::string& cell = records[r][base + k];
      if (cell != "0" && cell != "1") {
        throw ValueError("row " + std::to_string(r) + ", column '" +
                         header[base + k] + "': label must be 0 or 1, got '" +
                         cell + "'");
      }
      l.labels[k] = cell == "1" ? 1 : 0;
    }
    labels.push_back(std::move(l));
  }
  return BuildDataset(metrics, labels);
}

}  // namespace mrpred::dataset
