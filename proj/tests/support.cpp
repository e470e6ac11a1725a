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

#include "support.hpp"

#include <stdlib.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace mrpred::testing {

namespace fs = std::filesystem;

std::string SourceDir() { return MRPRED_SOURCE_DIR; }
std::string FixtureDir() { return SourceDir() + "/tests/fixtures"; }

std::string ReadText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

TempDir::TempDir() {
  std::string tmpl =
      (fs::temp_directory_path() / "mrpred-test-XXXXXX").string();
  if (::mkdtemp(tmpl.data()) == nullptr) throw std::runtime_error("mkdtemp");
  path_ = tmpl;
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

namespace {

// Splits one CSV line; fields may be double-quoted without embedded quotes.
std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
    } else if (c == ',' && !quoted) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::vector<std::map<std::string, std::string>> GoldenRows() {
  std::istringstream in(ReadText(FixtureDir() + "/golden/expected.csv"));
  std::string line;
  std::getline(in, line);
  const auto header = SplitCsvLine(line);
  std::vector<std::map<std::string, std::string>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto cells = SplitCsvLine(line);
    if (cells.size() != header.size())
      throw std::runtime_error("bad golden row");
    std::map<std::string, std::string> row;
    for (std::size_t i = 0; i < header.size(); ++i) row[header[i]] = cells[i];
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string LineRange(const std::string& text, int first, int last) {
  std::istringstream in(text);
  std::string line;
  std::string out;
  for (int n = 1; std::getline(in, line); ++n) {
    if (n >= first && n <= last) out += line + "\n";
  }
  return out;
}

namespace {

// Replaces comments and string/char literals with spaces.
std::string Blank(const std::string& s, miner::Language language) {
  const bool py = language == miner::Language::kPython;
  std::string out = s;
  std::size_t i = 0;
  auto blank_to = [&](std::size_t end) {
    for (std::size_t k = i; k < end && k < out.size(); ++k) {
      if (out[k] != '\n') out[k] = ' ';
    }
    i = end;
  };
  while (i < s.size()) {
    if (py && s[i] == '#') {
      blank_to(s.find('\n', i) == std::string::npos ? s.size()
                                                    : s.find('\n', i));
    } else if (!py && s.compare(i, 2, "//") == 0) {
      blank_to(s.find('\n', i) == std::string::npos ? s.size()
                                                    : s.find('\n', i));
    } else if (!py && s.compare(i, 2, "/*") == 0) {
      std::size_t e = s.find("*/", i + 2);
      blank_to(e == std::string::npos ? s.size() : e + 2);
    } else if (py && (s.compare(i, 3, "\"\"\"") == 0 ||
                      s.compare(i, 3, "'''") == 0)) {
      std::size_t e = s.find(s.substr(i, 3), i + 3);
      blank_to(e == std::string::npos ? s.size() : e + 3);
    } else if (s[i] == '"' || s[i] == '\'') {
      const char q = s[i];
      std::size_t k = i + 1;
      while (k < s.size() && s[k] != q) k += s[k] == '\\' ? 2 : 1;
      blank_to(k + 1);
    } else {
      ++i;
    }
  }
  return out;
}

int CountMatches(const std::string& s, const std::regex& re) {
  return static_cast<int>(std::distance(
      std::sregex_iterator(s.begin(), s.end(), re), std::sregex_iterator()));
}

}  // namespace

int BruteForceCcn(const std::string& source, miner::Language language) {
  const std::string s = Blank(source, language);
  if (language == miner::Language::kPython) {
    static const std::regex kWords(R"(\b(if|elif|for|while|except|and|or)\b)");
    return 1 + CountMatches(s, kWords);
  }
  static const std::regex kWords(R"(\b(if|for|while|do|case|catch)\b)");
  static const std::regex kLogic(R"(&&|\|\|)");
  // A '?' that is a generic wildcard is followed by '>', ',', extends or super.
  static const std::regex kTernary(R"(\?(?!\s*(>|,|extends\b|super\b)))");
  return 1 + CountMatches(s, kWords) + CountMatches(s, kLogic) +
         CountMatches(s, kTernary);
}

double BruteForceAuc(const std::vector<double>& scores,
                     const std::vector<int>& truth) {
  double wins = 0.0;
  long pairs = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (truth[i] != 1) continue;
    for (std::size_t j = 0; j < scores.size(); ++j) {
      if (truth[j] != 0) continue;
      ++pairs;
      if (scores[i] > scores[j]) {
        wins += 1.0;
      } else if (scores[i] == scores[j]) {
        wins += 0.5;
      }
    }
  }
  return wins / static_cast<double>(pairs);
}

dataset::Dataset MakeDataset(const Eigen::MatrixXd& x,
                             const std::vector<int>& y) {
  dataset::Dataset ds;
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    ds.feature_names.push_back("f" + std::to_string(j));
  }
  ds.rows = x;
  for (std::size_t i = 0; i < y.size(); ++i) {
    std::array<int, 6> l;
    l.fill(y[i]);
    ds.labels.push_back(l);
    ds.method_ids.push_back("m" + std::to_string(i));
  }
  return ds;
}

dataset::Dataset SeparableDataset(int n, int d, std::uint64_t seed,
                                  int informative) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> mag(0.2, 1.0);
  std::normal_distribution<double> noise(0.0, 1.0);
  Eigen::MatrixXd x(n, d);
  std::vector<int> y(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    y[static_cast<std::size_t>(i)] = i % 2;
    for (int j = 0; j < d; ++j) {
      x(i, j) =
          j == informative ? (i % 2 == 1 ? 1.0 : -1.0) * mag(gen) : noise(gen);
    }
  }
  return MakeDataset(x, y);
}

dataset::Dataset PermutedLabels(const dataset::Dataset& ds,
                                std::uint64_t seed) {
  dataset::Dataset out = ds;
  std::mt19937_64 gen(seed);
  std::shuffle(out.labels.begin(), out.labels.end(), gen);
  return out;
}

}  // namespace mrpred::testing
