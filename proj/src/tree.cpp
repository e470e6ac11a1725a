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
#include <cmath>
#include <numeric>

#include "mrpred/learn.hpp"

namespace mrpred::learn {

std::size_t Rng::Below(std::size_t n) {
  const unsigned __int128 wide = static_cast<unsigned __int128>(engine_()) *
                                 static_cast<unsigned __int128>(n);
  return static_cast<std::size_t>(wide >> 64);
}

double Tree::Predict(const Eigen::RowVectorXd& row) const {
  int at = 0;
  while (nodes[static_cast<std::size_t>(at)].feature >= 0) {
    const TreeNode& n = nodes[static_cast<std::size_t>(at)];
    at = row(n.feature) <= n.threshold ? n.left : n.right;
  }
  return nodes[static_cast<std::size_t>(at)].positive_fraction;
}

namespace {

// Sum of squared class counts over node size; larger means purer.
double Purity(double pos, double n) {
  return (pos * pos + (n - pos) * (n - pos)) / n;
}

struct Split {
  int feature = -1;
  double threshold = 0.0;
  double score = 0.0;
};

class Grower {
 public:
  Grower(const Eigen::MatrixXd& x, const std::vector<int>& y,
         const TreeOptions& opt, Rng* rng, std::vector<double>& importance)
      : x_(x), y_(y), opt_(opt), rng_(rng), importance_(importance) {
    order_.resize(static_cast<std::size_t>(x.cols()));
  }

  Tree Run(std::vector<std::size_t> sample) {
    Grow(std::move(sample), 0);
    return std::move(tree_);
  }

 private:
  int Grow(std::vector<std::size_t> idx, int depth) {
    const int id = static_cast<int>(tree_.nodes.size());
    tree_.nodes.emplace_back();
    const double n = static_cast<double>(idx.size());
    double pos = 0;
    for (std::size_t r : idx) pos += y_[r];
    {
      TreeNode& node = tree_.nodes.back();
      node.samples = static_cast<int>(idx.size());
      node.positive_fraction = pos / n;
    }
    if (pos == 0 || pos == n || static_cast<int>(idx.size()) < opt_.min_split ||
        (opt_.max_depth > 0 && depth >= opt_.max_depth)) {
      return id;
    }
    Split best = FindSplit(idx, pos);
    if (best.feature < 0) return id;

    importance_[static_cast<std::size_t>(best.feature)] +=
        best.score - Purity(pos, n);
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
    for (std::size_t r : idx) {
      (x_(static_cast<Eigen::Index>(r), best.feature) <= best.threshold ? left
                                                                        : right)
          .push_back(r);
    }
    idx.clear();
    idx.shrink_to_fit();
    const int l = Grow(std::move(left), depth + 1);
    const int r = Grow(std::move(right), depth + 1);
    TreeNode& node = tree_.nodes[static_cast<std::size_t>(id)];
    node.feature = best.feature;
    node.threshold = best.threshold;
    node.left = l;
    node.right = r;
    return id;
  }

  static bool Better(const Split& cand, const Split& best) {
    if (best.feature < 0) return true;
    const double tol = 1e-12 * std::max(1.0, std::abs(best.score));
    if (cand.score > best.score + tol) return true;
    if (cand.score < best.score - tol) return false;
    if (cand.feature != best.feature) return cand.feature < best.feature;
    return cand.threshold < best.threshold;
  }

  Split FindSplit(const std::vector<std::size_t>& idx, double pos) {
    const std::size_t d = order_.size();
    std::iota(order_.begin(), order_.end(), 0);
    const bool sampled = opt_.features_per_split > 0 &&
                         opt_.features_per_split < static_cast<int>(d);
    int budget = sampled ? opt_.features_per_split : static_cast<int>(d);
    Split best;
    std::vector<std::pair<double, int>> column(idx.size());
    for (std::size_t i = 0; i < d && budget > 0; ++i) {
      if (sampled) std::swap(order_[i], order_[i + rng_->Below(d - i)]);
      const int f = static_cast<int>(order_[i]);
      for (std::size_t k = 0; k < idx.size(); ++k) {
        column[k] = {x_(static_cast<Eigen::Index>(idx[k]), f), y_[idx[k]]};
      }
      std::sort(column.begin(), column.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      if (column.front().first == column.back().first) continue;
      --budget;
      const double n = static_cast<double>(column.size());
      double left_pos = 0;
      for (std::size_t k = 0; k + 1 < column.size(); ++k) {
        left_pos += column[k].second;
        const double lo = column[k].first;
        const double hi = column[k + 1].first;
        if (!(lo < hi)) continue;
        const double nl = static_cast<double>(k + 1);
        Split cand;
        cand.feature = f;
        cand.threshold = lo + (hi - lo) / 2.0;
        if (!(cand.threshold < hi)) cand.threshold = lo;
        cand.score = Purity(left_pos, nl) + Purity(pos - left_pos, n - nl);
        if (Better(cand, best)) best = cand;
      }
    }
    return best;
  }

  const Eigen::MatrixXd& x_;
  const std::vector<int>& y_;
  TreeOptions opt_;
  Rng* rng_;
  std::vector<double>& importance_;
  std::vector<std::size_t> order_;
  Tree tree_;
};

}  // namespace

Tree GrowTree(const Eigen::MatrixXd& x, const std::vector<int>& y,
              const std::vector<std::size_t>& sample, const TreeOptions& opt,
              Rng* rng, std::vector<double>& importance) {
  importance.resize(static_cast<std::size_t>(x.cols()), 0.0);
  return Grower(x, y, opt, rng, importance).Run(sample);
}

}  // namespace mrpred::learn
