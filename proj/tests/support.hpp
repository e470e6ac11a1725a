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

// Test helpers and the independent oracles. Nothing here calls into the
// library code it is used to check.

#ifndef MRPRED_TESTS_SUPPORT_HPP_
#define MRPRED_TESTS_SUPPORT_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mrpred/dataset.hpp"
#include "mrpred/lexer.hpp"

namespace mrpred::testing {

std::string SourceDir();
std::string FixtureDir();
std::string ReadText(const std::string& path);
void WriteText(const std::string& path, const std::string& text);

// Removes itself on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::string& path() const { return path_; }
  std::string File(const std::string& name) const { return path_ + "/" + name; }

 private:
  std::string path_;
};

// Rows of tests/fixtures/golden/expected.csv keyed by column name.
std::vector<std::map<std::string, std::string>> GoldenRows();

// Lines [first, last] (1-based) of `text`, joined with '\n'.
std::string LineRange(const std::string& text, int first, int last);

// 1 + decision points, counted on raw source text: comments and literals are
// blanked by a scanner written for this purpose, then keywords are matched
// on word boundaries and operators by substring.
int BruteForceCcn(const std::string& source, miner::Language language);

// Mean over every (positive, negative) pair of [s_pos > s_neg] + 0.5 [tie].
double BruteForceAuc(const std::vector<double>& scores,
                     const std::vector<int>& truth);

// Dataset with feature columns f0..f{d-1}; `y` is copied to all six MRs.
dataset::Dataset MakeDataset(const Eigen::MatrixXd& x,
                             const std::vector<int>& y);

// n rows, d features. Column `informative` is drawn from [-1, -0.2] for
// negatives and [0.2, 1] for positives; the other columns are N(0, 1) noise.
// Classes alternate so both have n/2 rows.
dataset::Dataset SeparableDataset(int n, int d, std::uint64_t seed,
                                  int informative = 0);

// Same features with the labels shuffled.
dataset::Dataset PermutedLabels(const dataset::Dataset& ds, std::uint64_t seed);

}  // namespace mrpred::testing

#endif  // MRPRED_TESTS_SUPPORT_HPP_
