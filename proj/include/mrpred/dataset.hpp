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

// Joins mined metrics with MR labels and encodes them into a numeric matrix.

#ifndef MRPRED_DATASET_HPP_
#define MRPRED_DATASET_HPP_

#include <Eigen/Dense>
#include <array>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "mrpred/miner.hpp"

namespace mrpred::dataset {

enum class MrKind { kAdd, kExc, kInc, kMul, kPer, kInv };

inline constexpr std::array<MrKind, 6> kAllMrs = {MrKind::kAdd, MrKind::kExc,
                                                  MrKind::kInc, MrKind::kMul,
                                                  MrKind::kPer, MrKind::kInv};

std::string_view MrName(MrKind mr);
// Case-insensitive. Throws ValidationError listing the valid names.
MrKind ParseMr(std::string_view name);
inline int MrIndex(MrKind mr) { return static_cast<int>(mr); }

struct LabeledMethod {
  std::string method_id;
  std::array<int, 6> labels{};  // indexed by MrIndex

  int label(MrKind mr) const { return labels[MrIndex(mr)]; }
};

struct MetricsRow {
  std::string method_id;
  std::string name;
  miner::MetricVector metrics;
};

// The 21 feature columns, in miner CSV order.
const std::vector<std::string>& FeatureNames();
bool IsCategorical(std::string_view feature);

// Category tables for the text-valued features; code = position.
class Encoders {
 public:
  // Returns the existing code or assigns the next one.
  int Fit(const std::string& feature, const std::string& value);
  // -1 for categories never seen.
  int Encode(const std::string& feature, const std::string& value) const;
  // Throws ValueError for an unknown code.
  const std::string& Decode(const std::string& feature, int code) const;
  const std::map<std::string, std::vector<std::string>>& tables() const {
    return tables_;
  }

  bool operator==(const Encoders&) const = default;

 private:
  std::map<std::string, std::vector<std::string>> tables_;
};

struct Dataset {
  std::vector<std::string> feature_names;
  Eigen::MatrixXd rows;  // n_methods x n_features
  std::vector<std::array<int, 6>> labels;
  std::vector<std::string> method_ids;
  Encoders encoders;

  std::size_t size() const { return method_ids.size(); }
  // 0/1 column for one MR.
  std::vector<int> LabelsFor(MrKind mr) const;
  // Column index of `name`; throws UnknownFeature.
  std::size_t FeatureIndex(const std::string& name) const;
};

// Throws SchemaError (header mismatch) or ParseError (bad cell).
std::vector<MetricsRow> LoadMetrics(std::istream& in);

// Throws SchemaError or ValueError.
std::vector<LabeledMethod> LoadLabels(std::istream& in);

std::vector<MetricsRow> ToMetricsRows(
    const std::vector<miner::MinedMethod>& mined);

// Rows follow `metrics` order, restricted to labeled methods. Metrics rows
// without a label are dropped and reported through `warnings`. Throws
// JoinError when a labeled method has no metrics.
Dataset BuildDataset(const std::vector<MetricsRow>& metrics,
                     const std::vector<LabeledMethod>& labels,
                     std::vector<std::string>* warnings = nullptr);

// Encodes one metrics row with the dataset's frozen encoders.
Eigen::RowVectorXd EncodeRow(const Dataset& ds,
                             const miner::MetricVector& metrics);

// Column slice in the given order. Throws UnknownFeature.
Dataset SelectFeatures(const Dataset& ds,
                       const std::vector<std::string>& names);

// Miner schema followed by ADD,EXC,INC,MUL,PER,INV.
void WriteLabeledCsv(std::ostream& out, const std::vector<MetricsRow>& metrics,
                     const std::vector<LabeledMethod>& labels);

// Reads a file written by WriteLabeledCsv and rebuilds the Dataset.
Dataset LoadLabeledCsv(std::istream& in);

}  // namespace mrpred::dataset

#endif  // MRPRED_DATASET_HPP_
