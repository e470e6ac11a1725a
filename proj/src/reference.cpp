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

#include "mrpred/reference.hpp"

#include "mrpred/errors.hpp"

namespace mrpred::reference {

using dataset::MrIndex;
using dataset::MrKind;
using learn::ClassifierKind;

namespace {

// Per metric: values at 3, 12 and 21 features.
struct GridRow {
  MrKind mr;
  ClassifierKind kind;
  std::array<std::array<double, 3>, 5> metrics;  // acc, prec, rec, f1, auc
};

// clang-format off
constexpr std::array<GridRow, 30> kGrid = {{
    {MrKind::kAdd, ClassifierKind::kRf, {{{0.764, 0.886, 0.884}, {0.627, 0.767, 0.769}, {0.972, 0.971, 0.973}, {0.827, 0.830, 0.824}, {0.620, 0.886, 0.590}}}},
    {MrKind::kAdd, ClassifierKind::kDt, {{{0.787, 0.800, 0.680}, {0.769, 0.812, 0.725}, {0.750, 0.833, 0.666}, {0.692, 0.727, 0.656}, {0.757, 0.816, 0.698}}}},
    {MrKind::kAdd, ClassifierKind::kGnb, {{{0.809, 0.833, 0.726}, {0.805, 0.914, 0.695}, {0.780, 0.833, 0.726}, {0.796, 0.823, 0.769}, {0.771, 0.875, 0.667}}}},
    {MrKind::kAdd, ClassifierKind::kSvmLinear, {{{0.740, 0.803, 0.620}, {0.754, 0.833, 0.675}, {0.729, 0.838, 0.620}, {0.747, 0.835, 0.659}, {0.753, 0.833, 0.673}}}},
    {MrKind::kAdd, ClassifierKind::kLr, {{{0.680, 0.800, 0.680}, {0.750, 0.807, 0.693}, {0.762, 0.833, 0.690}, {0.762, 0.833, 0.690}, {0.738, 0.800, 0.675}}}},
    {MrKind::kExc, ClassifierKind::kRf, {{{0.725, 0.800, 0.650}, {0.667, 0.866, 0.614}, {0.833, 1.000, 0.666}, {0.733, 0.800, 0.666}, {0.629, 0.833, 0.666}}}},
    {MrKind::kExc, ClassifierKind::kDt, {{{0.660, 0.750, 0.570}, {0.770, 0.844, 0.695}, {0.600, 0.667, 0.532}, {0.551, 0.602, 0.500}, {0.602, 0.667, 0.536}}}},
    {MrKind::kExc, ClassifierKind::kGnb, {{{0.690, 0.712, 0.667}, {0.733, 0.800, 0.666}, {0.600, 0.667, 0.534}, {0.564, 0.667, 0.461}, {0.595, 0.619, 0.571}}}},
    {MrKind::kExc, ClassifierKind::kSvmLinear, {{{0.672, 0.704, 0.640}, {0.700, 0.733, 0.667}, {0.599, 0.667, 0.530}, {0.710, 0.857, 0.562}, {0.634, 0.694, 0.573}}}},
    {MrKind::kExc, ClassifierKind::kLr, {{{0.662, 0.657, 0.667}, {0.735, 0.844, 0.625}, {0.628, 0.665, 0.590}, {0.621, 0.671, 0.571}, {0.610, 0.696, 0.523}}}},
    {MrKind::kInc, ClassifierKind::kRf, {{{0.765, 0.900, 0.630}, {0.767, 0.888, 0.652}, {0.778, 0.890, 0.666}, {0.808, 0.888, 0.727}, {0.720, 0.717, 0.694}}}},
    {MrKind::kInc, ClassifierKind::kDt, {{{0.681, 0.750, 0.612}, {0.566, 0.616, 0.516}, {0.465, 0.596, 0.333}, {0.513, 0.589, 0.438}, {0.564, 0.605, 0.523}}}},
    {MrKind::kInc, ClassifierKind::kGnb, {{{0.687, 0.705, 0.668}, {0.733, 0.862, 0.604}, {0.627, 0.667, 0.587}, {0.604, 0.667, 0.542}, {0.596, 0.681, 0.510}}}},
    {MrKind::kInc, ClassifierKind::kSvmLinear, {{{0.706, 0.802, 0.610}, {0.737, 0.806, 0.667}, {0.590, 0.645, 0.534}, {0.558, 0.667, 0.448}, {0.655, 0.761, 0.548}}}},
    {MrKind::kInc, ClassifierKind::kLr, {{{0.657, 0.701, 0.613}, {0.648, 0.695, 0.601}, {0.633, 0.668, 0.597}, {0.452, 0.571, 0.333}, {0.560, 0.690, 0.429}}}},
    {MrKind::kMul, ClassifierKind::kRf, {{{0.725, 0.800, 0.650}, {0.875, 0.853, 0.657}, {0.912, 1.000, 0.823}, {0.812, 0.875, 0.748}, {0.649, 0.762, 0.578}}}},
    {MrKind::kMul, ClassifierKind::kDt, {{{0.662, 0.703, 0.620}, {0.749, 0.802, 0.695}, {0.828, 0.833, 0.822}, {0.776, 0.833, 0.719}, {0.721, 0.791, 0.651}}}},
    {MrKind::kMul, ClassifierKind::kGnb, {{{0.680, 0.700, 0.660}, {0.755, 0.834, 0.675}, {0.899, 0.940, 0.857}, {0.803, 0.823, 0.782}, {0.575, 0.625, 0.524}}}},
    {MrKind::kMul, ClassifierKind::kSvmLinear, {{{0.707, 0.804, 0.610}, {0.792, 0.850, 0.733}, {0.845, 0.857, 0.833}, {0.742, 0.857, 0.626}, {0.726, 0.761, 0.690}}}},
    {MrKind::kMul, ClassifierKind::kLr, {{{0.741, 0.801, 0.680}, {0.772, 0.875, 0.669}, {0.840, 0.857, 0.823}, {0.817, 0.875, 0.759}, {0.792, 0.833, 0.750}}}},
    {MrKind::kPer, ClassifierKind::kRf, {{{0.715, 0.810, 0.620}, {0.625, 0.814, 0.675}, {0.639, 0.712, 0.566}, {0.726, 0.789, 0.662}, {0.763, 0.725, 0.747}}}},
    {MrKind::kPer, ClassifierKind::kDt, {{{0.708, 0.750, 0.666}, {0.846, 0.914, 0.777}, {0.721, 0.775, 0.666}, {0.717, 0.857, 0.576}, {0.809, 0.857, 0.761}}}},
    {MrKind::kPer, ClassifierKind::kGnb, {{{0.623, 0.700, 0.545}, {0.725, 0.828, 0.622}, {0.500, 0.666, 0.333}, {0.589, 0.727, 0.450}, {0.604, 0.642, 0.566}}}},
    {MrKind::kPer, ClassifierKind::kSvmLinear, {{{0.875, 0.910, 0.840}, {0.837, 0.875, 0.799}, {0.709, 0.750, 0.667}, {0.698, 0.729, 0.667}, {0.793, 0.825, 0.761}}}},
    {MrKind::kPer, ClassifierKind::kLr, {{{0.765, 0.830, 0.700}, {0.803, 0.822, 0.783}, {0.688, 0.709, 0.667}, {0.720, 0.750, 0.690}, {0.745, 0.795, 0.694}}}},
    {MrKind::kInv, ClassifierKind::kRf, {{{0.655, 0.702, 0.608}, {0.675, 0.833, 0.675}, {0.788, 0.857, 0.719}, {0.776, 0.800, 0.751}, {0.595, 0.625, 0.640}}}},
    {MrKind::kInv, ClassifierKind::kDt, {{{0.762, 0.800, 0.600}, {0.703, 0.844, 0.563}, {0.762, 0.857, 0.667}, {0.691, 0.714, 0.667}, {0.604, 0.667, 0.541}}}},
    {MrKind::kInv, ClassifierKind::kGnb, {{{0.661, 0.701, 0.620}, {0.659, 0.833, 0.484}, {0.759, 0.857, 0.660}, {0.787, 0.823, 0.750}, {0.568, 0.625, 0.511}}}},
    {MrKind::kInv, ClassifierKind::kSvmLinear, {{{0.776, 0.802, 0.750}, {0.768, 0.844, 0.692}, {0.799, 0.833, 0.764}, {0.813, 0.857, 0.769}, {0.762, 0.857, 0.667}}}},
    {MrKind::kInv, ClassifierKind::kLr, {{{0.768, 0.860, 0.676}, {0.728, 0.761, 0.695}, {0.794, 0.857, 0.731}, {0.767, 0.857, 0.676}, {0.714, 0.762, 0.667}}}},
}};

// Columns: dataArg, CCN, tloc, sloc_whbl, sloc_statements, nloc_whbl, nloc,
// token_count, start_line, end_line, numArg, numLoops, total_Var, numOper,
// numMethCall, has_return, totalReturn, numOperands, returnDataType, ext,
// full_parameters.
constexpr std::array<std::array<double, 21>, 6> kImportance = {{
    {0.92, 1.00, 0.71, 0.40, 0.38, 0.31, 0.30, 0.30, 0.29, 0.29, 0.28, 0.28, 0.27, 0.26, 0.24, 0.23, 0.22, 0.21, 0.00, 0.00, 0.00},
    {1.00, 0.86, 0.62, 0.54, 0.48, 0.48, 0.46, 0.45, 0.45, 0.43, 0.42, 0.30, 0.28, 0.26, 0.24, 0.24, 0.22, 0.21, 0.00, 0.00, 0.00},
    {1.00, 0.81, 0.53, 0.48, 0.46, 0.45, 0.44, 0.43, 0.43, 0.42, 0.41, 0.33, 0.28, 0.25, 0.22, 0.21, 0.20, 0.16, 0.00, 0.00, 0.00},
    {1.00, 0.72, 0.67, 0.41, 0.33, 0.32, 0.30, 0.28, 0.27, 0.26, 0.26, 0.25, 0.25, 0.24, 0.23, 0.23, 0.21, 0.15, 0.00, 0.00, 0.00},
    {0.57, 1.00, 0.54, 0.41, 0.38, 0.36, 0.24, 0.23, 0.23, 0.22, 0.22, 0.21, 0.20, 0.19, 0.18, 0.15, 0.14, 0.09, 0.00, 0.00, 0.00},
    {1.00, 0.68, 0.56, 0.41, 0.35, 0.32, 0.31, 0.30, 0.29, 0.28, 0.27, 0.26, 0.25, 0.22, 0.21, 0.20, 0.19, 0.18, 0.00, 0.00, 0.00},
}};
constexpr std::array<double, 21> kImportanceAverage = {
    0.91, 0.85, 0.60, 0.44, 0.40, 0.37, 0.34, 0.33, 0.33, 0.32, 0.31,
    0.27, 0.25, 0.24, 0.22, 0.21, 0.20, 0.17, 0.00, 0.00, 0.00};

constexpr std::array<std::array<double, 7>, 6> kSweepAuc = {{
    {0.620, 0.590, 0.620, 0.886, 0.620, 0.590, 0.590},
    {0.629, 0.593, 0.583, 0.833, 0.589, 0.623, 0.666},
    {0.720, 0.675, 0.720, 0.717, 0.675, 0.675, 0.694},
    {0.649, 0.518, 0.518, 0.762, 0.518, 0.491, 0.578},
    {0.763, 0.725, 0.725, 0.747, 0.725, 0.641, 0.747},
    {0.595, 0.611, 0.588, 0.625, 0.636, 0.545, 0.640},
}};
constexpr std::array<std::array<double, 7>, 6> kSweepPrecision = {{
    {0.627, 0.613, 0.640, 0.767, 0.740, 0.729, 0.769},
    {0.667, 0.651, 0.693, 0.866, 0.667, 0.688, 0.614},
    {0.767, 0.733, 0.733, 0.888, 0.727, 0.761, 0.652},
    {0.875, 0.833, 0.854, 0.853, 0.675, 0.630, 0.657},
    {0.625, 0.761, 0.805, 0.814, 0.625, 0.625, 0.625},
    {0.675, 0.625, 0.714, 0.833, 0.750, 0.600, 0.675},
}};

constexpr std::array<BaselineAuc, 6> kBaseline = {{
    {0.81, 0.83, 0.92},
    {0.78, 0.78, 0.90},
    {0.84, 0.88, 0.89},
    {0.73, 0.78, 0.83},
    {0.93, 0.91, 0.95},
    {0.84, 0.68, 0.76},
}};

// Columns: SVM, RF, DT, GNB, LR.
constexpr std::array<std::array<double, 5>, 6> kComparison = {{
    {0.83, 0.89, 0.82, 0.88, 0.80},
    {0.69, 0.83, 0.67, 0.62, 0.70},
    {0.76, 0.72, 0.61, 0.68, 0.69},
    {0.76, 0.76, 0.79, 0.63, 0.83},
    {0.83, 0.76, 0.86, 0.64, 0.80},
    {0.86, 0.64, 0.67, 0.63, 0.76},
}};
// clang-format on

constexpr std::array<MrDescription, 6> kDescriptions = {{
    {"Add a positive constant", "Increase or remain constant", 56},
    {"Remove an element", "Decrease or remain constant", 32},
    {"Add a new element", "Increase or remain constant", 34},
    {"Multiply by a positive constant", "Increase or remain constant", 66},
    {"Permute the components", "Remain constant", 33},
    {"Take the inverse of each element", "Decrease or remain constant", 63},
}};

}  // namespace

MrDescription Describe(MrKind mr) { return kDescriptions[MrIndex(mr)]; }

const std::vector<std::string>& ImportanceColumns() {
  static const std::vector<std::string> kColumns = {
      "dataArg",         "CCN",         "tloc",           "sloc_whbl",
      "sloc_statements", "nloc_whbl",   "nloc",           "token_count",
      "start_line",      "end_line",    "numArg",         "numLoops",
      "total_Var",       "numOper",     "numMethCall",    "has_return",
      "totalReturn",     "numOperands", "returnDataType", "ext",
      "full_parameters"};
  return kColumns;
}

const std::array<double, 21>& Importance(MrKind mr) {
  return kImportance[MrIndex(mr)];
}

const std::array<double, 21>& ImportanceAverage() { return kImportanceAverage; }

const std::array<double, 7>& SweepAuc(MrKind mr) {
  return kSweepAuc[MrIndex(mr)];
}

const std::array<double, 7>& SweepPrecision(MrKind mr) {
  return kSweepPrecision[MrIndex(mr)];
}

CellMetrics GridCell(MrKind mr, ClassifierKind kind, int size) {
  int col = -1;
  for (std::size_t i = 0; i < kGridSizes.size(); ++i) {
    if (kGridSizes[i] == size) col = static_cast<int>(i);
  }
  if (col < 0) {
    throw MissingCell("no reference cell for " + std::to_string(size) +
                      " features");
  }
  for (const auto& row : kGrid) {
    if (row.mr == mr && row.kind == kind) {
      const auto c = static_cast<std::size_t>(col);
      return {row.metrics[0][c], row.metrics[1][c], row.metrics[2][c],
              row.metrics[3][c], row.metrics[4][c]};
    }
  }
  throw MissingCell("no reference cell");
}

BaselineAuc Baseline(MrKind mr) { return kBaseline[MrIndex(mr)]; }

double ComparisonAuc(MrKind mr, ClassifierKind kind) {
  static constexpr std::array<ClassifierKind, 5> kOrder = {
      ClassifierKind::kSvmLinear, ClassifierKind::kRf, ClassifierKind::kDt,
      ClassifierKind::kGnb, ClassifierKind::kLr};
  for (std::size_t i = 0; i < kOrder.size(); ++i) {
    if (kOrder[i] == kind) return kComparison[MrIndex(mr)][i];
  }
  throw MissingCell("no comparison value");
}

}  // namespace mrpred::reference
