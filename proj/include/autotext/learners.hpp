#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "autotext/common.hpp"
#include "autotext/represent.hpp"

namespace autotext {

inline double accuracy(const std::vector<int>& predicted,
                       const std::vector<int>& truth) {
  if (predicted.size() != truth.size() || truth.empty()) {
    throw ValidationError("accuracy: size mismatch or empty");
  }
  std::size_t hits = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (predicted[i] == truth[i]) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(truth.size());
}

namespace detail {

inline void check_labels(const FeatureMatrix& x, const std::vector<int>& y,
                         int n_classes) {
  if (x.rows() != y.size()) throw ValidationError("rows != labels");
  if (x.rows() == 0) throw ValidationError("empty training data");
  std::vector<bool> seen(static_cast<std::size_t>(n_classes), false);
  for (int c : y) {
    if (c < 0 || c >= n_classes) throw ValidationError("label out of range");
    seen[static_cast<std::size_t>(c)] = true;
  }
  int present = 0;
  for (bool b : seen) present += b ? 1 : 0;
  if (present < 2) {
    throw ValidationError("training data holds fewer than 2 classes");
  }
}

inline void densify_row(const FeatureMatrix& x, std::size_t i,
                        std::vector<double>& buf) {
  buf.assign(x.cols(), 0.0);
  x.for_each_in_row(i, [&](std::size_t j, double v) { buf[j] = v; });
}

}  // namespace detail

// ---------------------------------------------------------------- linear SVM

struct SvmConfig {
  double c = 1.0;
  double tol = 1e-3;          // duality-gap tolerance, relative
  std::size_t max_epochs = 1000;
};

// L2-regularized L1-loss SVM trained by dual coordinate descent, one-vs-rest
// for multiclass, bias handled as an augmented constant feature.
class LinearSvm {
 public:
  static LinearSvm fit(const FeatureMatrix& x, const std::vector<int>& y,
                       int n_classes, const SvmConfig& cfg,
                       std::uint64_t seed) {
    detail::check_labels(x, y, n_classes);
    LinearSvm model;
    model.n_classes_ = n_classes;
    model.dim_ = x.cols();
    const std::size_t n = x.rows();

    std::vector<double> q(n);  // x_i . x_i + 1 (bias)
    for (std::size_t i = 0; i < n; ++i) {
      double s = 1.0;
      x.for_each_in_row(i, [&](std::size_t, double v) { s += v * v; });
      q[i] = s;
    }

    model.w_.assign(static_cast<std::size_t>(n_classes),
                    std::vector<double>(x.cols() + 1, 0.0));
    model.dual_traces_.resize(static_cast<std::size_t>(n_classes));

    for (int cls = 0; cls < n_classes; ++cls) {
      std::vector<double>& w = model.w_[static_cast<std::size_t>(cls)];
      std::vector<double> alpha(n, 0.0);
      std::vector<signed char> yb(n);
      for (std::size_t i = 0; i < n; ++i) yb[i] = y[i] == cls ? 1 : -1;
      std::vector<std::size_t> order(n);
      for (std::size_t i = 0; i < n; ++i) order[i] = i;
      Rng rng(mix_seed(seed, static_cast<std::uint64_t>(cls)));

      auto margin = [&](std::size_t i) {
        double m = w[x.cols()];  // bias feature is constant 1
        x.for_each_in_row(i, [&](std::size_t j, double v) { m += w[j] * v; });
        return m;
      };

      for (std::size_t epoch = 0; epoch < cfg.max_epochs; ++epoch) {
        rng.shuffle(order);
        for (std::size_t i : order) {
          double g = yb[i] * margin(i) - 1.0;
          double pg = g;
          if (alpha[i] <= 0.0) pg = std::min(g, 0.0);
          if (alpha[i] >= cfg.c) pg = std::max(g, 0.0);
          if (pg == 0.0) continue;
          double old = alpha[i];
          double next = std::min(std::max(old - g / q[i], 0.0), cfg.c);
          alpha[i] = next;
          double delta = (next - old) * yb[i];
          if (delta != 0.0) {
            x.for_each_in_row(i, [&](std::size_t j, double v) { w[j] += delta * v; });
            w[x.cols()] += delta;
          }
        }
        // Duality gap: P(w) - D(alpha) with D = sum(alpha) - 0.5 w.w.
        double wtw = 0;
        for (double v : w) wtw += v * v;
        double hinge = 0;
        for (std::size_t i = 0; i < n; ++i) {
          hinge += std::max(0.0, 1.0 - yb[i] * margin(i));
        }
        double alpha_sum = 0;
        for (double a : alpha) alpha_sum += a;
        double primal = 0.5 * wtw + cfg.c * hinge;
        double gap = primal - (alpha_sum - 0.5 * wtw);
        model.dual_traces_[static_cast<std::size_t>(cls)].push_back(
            0.5 * wtw - alpha_sum);  // the minimized dual objective
        if (gap <= cfg.tol * (1.0 + std::abs(primal))) break;
      }
    }
    return model;
  }

  double decision_value(const FeatureMatrix& x, std::size_t row,
                        int cls) const {
    const auto& w = w_[static_cast<std::size_t>(cls)];
    double m = w[dim_];
    x.for_each_in_row(row, [&](std::size_t j, double v) {
      if (j < dim_) m += w[j] * v;
    });
    return m;
  }

  int predict_row(const FeatureMatrix& x, std::size_t row) const {
    int best = 0;
    double best_score = -std::numeric_limits<double>::infinity();
    for (int cls = 0; cls < n_classes_; ++cls) {
      double s = decision_value(x, row, cls);
      if (s > best_score) {
        best_score = s;
        best = cls;
      }
    }
    return best;
  }

  std::vector<int> predict(const FeatureMatrix& x) const {
    std::vector<int> out(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) out[i] = predict_row(x, i);
    return out;
  }

  const std::vector<std::vector<double>>& weights() const { return w_; }
  // Per-class per-epoch minimized dual objective 0.5 w.w - sum(alpha).
  const std::vector<std::vector<double>>& dual_traces() const {
    return dual_traces_;
  }

 private:
  std::size_t dim_ = 0;
  int n_classes_ = 0;
  std::vector<std::vector<double>> w_;
  std::vector<std::vector<double>> dual_traces_;
};

// ---------------------------------------------------------------- 1-NN

class Knn1 {
 public:
  static Knn1 fit(const FeatureMatrix& x, const std::vector<int>& y,
                  int n_classes) {
    detail::check_labels(x, y, n_classes);
    Knn1 m;
    m.train_ = x;
    m.y_ = y;
    m.norms_.resize(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) {
      double s = 0;
      x.for_each_in_row(i, [&](std::size_t, double v) { s += v * v; });
      m.norms_[i] = s;
    }
    return m;
  }

  int predict_row(const FeatureMatrix& x, std::size_t row) const {
    std::vector<double> buf;
    detail::densify_row(x, row, buf);
    double qn = 0;
    for (double v : buf) qn += v * v;
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < train_.rows(); ++i) {
      double dot = 0;
      train_.for_each_in_row(i, [&](std::size_t j, double v) { dot += v * buf[j]; });
      double d2 = qn + norms_[i] - 2.0 * dot;
      if (d2 < best) {  // strict: ties resolve to the lowest training index
        best = d2;
        best_i = i;
      }
    }
    return y_[best_i];
  }

  std::vector<int> predict(const FeatureMatrix& x) const {
    std::vector<int> out(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) out[i] = predict_row(x, i);
    return out;
  }

 private:
  FeatureMatrix train_;
  std::vector<int> y_;
  std::vector<double> norms_;
};

// ---------------------------------------------------------------- trees

struct TreeConfig {
  std::optional<std::size_t> max_depth;  // nullopt = unlimited
  std::size_t min_samples_leaf = 1;
};

namespace detail {

// Column-major copy for fast per-feature scans during tree growth.
struct TreeData {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;  // column-major

  static TreeData from(const FeatureMatrix& x) {
    TreeData t;
    t.rows = x.rows();
    t.cols = x.cols();
    t.data.assign(t.rows * t.cols, 0.0);
    for (std::size_t i = 0; i < t.rows; ++i) {
      x.for_each_in_row(i, [&](std::size_t j, double v) {
        t.data[j * t.rows + i] = v;
      });
    }
    return t;
  }

  double at(std::size_t i, std::size_t j) const { return data[j * rows + i]; }
};

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0;
  int left = -1;
  int right = -1;
  double value = 0;  // class id (classification) or mean (regression)
};

struct GrowthSpec {
  bool classify = true;
  int n_classes = 0;
  std::size_t max_depth = std::numeric_limits<std::size_t>::max();
  std::size_t min_leaf = 1;
  std::size_t features_per_split = 0;  // 0 or >= cols means all features
  std::size_t total_samples = 0;       // for importance weighting
};

inline double gini_impurity(const std::vector<std::size_t>& counts,
                            std::size_t n) {
  if (n == 0) return 0;
  double g = 1.0;
  for (std::size_t c : counts) {
    double p = static_cast<double>(c) / static_cast<double>(n);
    g -= p * p;
  }
  return g;
}

class TreeGrower {
 public:
  TreeGrower(const TreeData& data, const std::vector<int>* y_class,
             const std::vector<double>* y_reg, const GrowthSpec& spec,
             Rng* rng, std::vector<double>* importance)
      : data_(data), y_class_(y_class), y_reg_(y_reg), spec_(spec),
        rng_(rng), importance_(importance) {}

  std::vector<TreeNode> grow(std::vector<std::size_t> samples) {
    nodes_.clear();
    build(std::move(samples), 0);
    return std::move(nodes_);
  }

 private:
  struct Split {
    bool found = false;
    std::size_t feature = 0;
    double threshold = 0;
    // Candidates are visited in ascending (feature, threshold) order and a
    // new best must strictly improve, so ties keep the earliest candidate.
    double improvement = 1e-12;
  };

  double node_impurity(const std::vector<std::size_t>& samples,
                       std::vector<std::size_t>& class_counts,
                       double& mean) const {
    if (spec_.classify) {
      class_counts.assign(static_cast<std::size_t>(spec_.n_classes), 0);
      for (std::size_t i : samples) {
        class_counts[static_cast<std::size_t>((*y_class_)[i])]++;
      }
      return gini_impurity(class_counts, samples.size());
    }
    double sum = 0, ssq = 0;
    for (std::size_t i : samples) {
      double v = (*y_reg_)[i];
      sum += v;
      ssq += v * v;
    }
    mean = sum / static_cast<double>(samples.size());
    return std::max(ssq / static_cast<double>(samples.size()) - mean * mean, 0.0);
  }

  std::vector<std::size_t> candidate_features() const {
    std::vector<std::size_t> feats(data_.cols);
    for (std::size_t j = 0; j < data_.cols; ++j) feats[j] = j;
    if (spec_.features_per_split > 0 && spec_.features_per_split < data_.cols &&
        rng_ != nullptr) {
      for (std::size_t k = 0; k < spec_.features_per_split; ++k) {
        std::size_t pick = k + rng_->below(feats.size() - k);
        std::swap(feats[k], feats[pick]);
      }
      feats.resize(spec_.features_per_split);
      // Ascending order so equal-gain ties resolve to the lowest index.
      std::sort(feats.begin(), feats.end());
    }
    return feats;
  }

  Split best_split(const std::vector<std::size_t>& samples,
                   double parent_impurity) const {
    Split best;
    const std::size_t n = samples.size();
    std::vector<std::pair<double, std::size_t>> sorted(n);
    for (std::size_t feature : candidate_features()) {
      for (std::size_t k = 0; k < n; ++k) {
        sorted[k] = {data_.at(samples[k], feature), samples[k]};
      }
      std::sort(sorted.begin(), sorted.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      if (sorted.front().first == sorted.back().first) continue;

      if (spec_.classify) {
        std::vector<std::size_t> left_counts(static_cast<std::size_t>(spec_.n_classes), 0);
        std::vector<std::size_t> right_counts(static_cast<std::size_t>(spec_.n_classes), 0);
        for (std::size_t k = 0; k < n; ++k) {
          right_counts[static_cast<std::size_t>((*y_class_)[sorted[k].second])]++;
        }
        for (std::size_t k = 0; k + 1 < n; ++k) {
          std::size_t cls = static_cast<std::size_t>((*y_class_)[sorted[k].second]);
          left_counts[cls]++;
          right_counts[cls]--;
          if (sorted[k].first == sorted[k + 1].first) continue;
          std::size_t nl = k + 1, nr = n - nl;
          if (nl < spec_.min_leaf || nr < spec_.min_leaf) continue;
          double child =
              (static_cast<double>(nl) * gini_impurity(left_counts, nl) +
               static_cast<double>(nr) * gini_impurity(right_counts, nr)) /
              static_cast<double>(n);
          double improvement = parent_impurity - child;
          if (improvement > best.improvement) {
            best.found = true;
            best.improvement = improvement;
            best.feature = feature;
            best.threshold = 0.5 * (sorted[k].first + sorted[k + 1].first);
          }
        }
      } else {
        double right_sum = 0, right_ssq = 0;
        for (std::size_t k = 0; k < n; ++k) {
          double v = (*y_reg_)[sorted[k].second];
          right_sum += v;
          right_ssq += v * v;
        }
        double left_sum = 0, left_ssq = 0;
        for (std::size_t k = 0; k + 1 < n; ++k) {
          double v = (*y_reg_)[sorted[k].second];
          left_sum += v;
          left_ssq += v * v;
          right_sum -= v;
          right_ssq -= v * v;
          if (sorted[k].first == sorted[k + 1].first) continue;
          std::size_t nl = k + 1, nr = n - nl;
          if (nl < spec_.min_leaf || nr < spec_.min_leaf) continue;
          double dl = static_cast<double>(nl), dr = static_cast<double>(nr);
          double imp_l = std::max(left_ssq / dl - (left_sum / dl) * (left_sum / dl), 0.0);
          double imp_r = std::max(right_ssq / dr - (right_sum / dr) * (right_sum / dr), 0.0);
          double child = (dl * imp_l + dr * imp_r) / static_cast<double>(n);
          double improvement = parent_impurity - child;
          if (improvement > best.improvement) {
            best.found = true;
            best.improvement = improvement;
            best.feature = feature;
            best.threshold = 0.5 * (sorted[k].first + sorted[k + 1].first);
          }
        }
      }
    }
    return best;
  }

  double leaf_value(const std::vector<std::size_t>& class_counts,
                    double mean) const {
    if (!spec_.classify) return mean;
    std::size_t best_c = 0, best_n = 0;
    for (std::size_t c = 0; c < class_counts.size(); ++c) {
      if (class_counts[c] > best_n) {  // strict: ties to the lowest class
        best_n = class_counts[c];
        best_c = c;
      }
    }
    return static_cast<double>(best_c);
  }

  int build(std::vector<std::size_t> samples, std::size_t depth) {
    std::vector<std::size_t> class_counts;
    double mean = 0;
    double impurity = node_impurity(samples, class_counts, mean);
    int index = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    nodes_[static_cast<std::size_t>(index)].value = leaf_value(class_counts, mean);
    if (impurity <= 1e-12 || depth >= spec_.max_depth ||
        samples.size() < 2 * spec_.min_leaf) {
      return index;
    }
    Split split = best_split(samples, impurity);
    if (!split.found) return index;
    if (importance_ != nullptr) {
      (*importance_)[split.feature] +=
          split.improvement * static_cast<double>(samples.size()) /
          static_cast<double>(spec_.total_samples);
    }
    std::vector<std::size_t> left, right;
    for (std::size_t i : samples) {
      (data_.at(i, split.feature) <= split.threshold ? left : right).push_back(i);
    }
    samples.clear();
    samples.shrink_to_fit();
    int l = build(std::move(left), depth + 1);
    int r = build(std::move(right), depth + 1);
    nodes_[static_cast<std::size_t>(index)].feature = static_cast<int>(split.feature);
    nodes_[static_cast<std::size_t>(index)].threshold = split.threshold;
    nodes_[static_cast<std::size_t>(index)].left = l;
    nodes_[static_cast<std::size_t>(index)].right = r;
    return index;
  }

  const TreeData& data_;
  const std::vector<int>* y_class_;
  const std::vector<double>* y_reg_;
  GrowthSpec spec_;
  Rng* rng_;
  std::vector<double>* importance_;
  std::vector<TreeNode> nodes_;
};

inline double tree_predict(const std::vector<TreeNode>& nodes,
                           const std::vector<double>& x) {
  int i = 0;
  while (nodes[static_cast<std::size_t>(i)].feature >= 0) {
    const TreeNode& nd = nodes[static_cast<std::size_t>(i)];
    i = x[static_cast<std::size_t>(nd.feature)] <= nd.threshold ? nd.left
                                                                : nd.right;
  }
  return nodes[static_cast<std::size_t>(i)].value;
}

}  // namespace detail

// CART decision tree; classification uses Gini impurity, regression uses
// variance reduction. Split ties resolve to the lowest feature index and the
// lowest threshold.
class DecisionTree {
 public:
  static DecisionTree fit_classifier(const FeatureMatrix& x,
                                     const std::vector<int>& y, int n_classes,
                                     const TreeConfig& cfg) {
    detail::check_labels(x, y, n_classes);
    DecisionTree t;
    t.classify_ = true;
    auto data = detail::TreeData::from(x);
    detail::GrowthSpec spec;
    spec.classify = true;
    spec.n_classes = n_classes;
    spec.max_depth = cfg.max_depth.value_or(std::numeric_limits<std::size_t>::max());
    spec.min_leaf = cfg.min_samples_leaf;
    spec.total_samples = x.rows();
    detail::TreeGrower grower(data, &y, nullptr, spec, nullptr, nullptr);
    std::vector<std::size_t> all(x.rows());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    t.nodes_ = grower.grow(std::move(all));
    return t;
  }

  static DecisionTree fit_regressor(const FeatureMatrix& x,
                                    const std::vector<double>& y,
                                    const TreeConfig& cfg) {
    if (x.rows() != y.size() || y.empty()) {
      throw ValidationError("tree regressor: bad shapes");
    }
    DecisionTree t;
    t.classify_ = false;
    auto data = detail::TreeData::from(x);
    detail::GrowthSpec spec;
    spec.classify = false;
    spec.max_depth = cfg.max_depth.value_or(std::numeric_limits<std::size_t>::max());
    spec.min_leaf = cfg.min_samples_leaf;
    spec.total_samples = x.rows();
    detail::TreeGrower grower(data, nullptr, &y, spec, nullptr, nullptr);
    std::vector<std::size_t> all(x.rows());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    t.nodes_ = grower.grow(std::move(all));
    return t;
  }

  int predict_row(const FeatureMatrix& x, std::size_t row) const {
    std::vector<double> buf;
    detail::densify_row(x, row, buf);
    return static_cast<int>(detail::tree_predict(nodes_, buf));
  }

  double predict_value_row(const FeatureMatrix& x, std::size_t row) const {
    std::vector<double> buf;
    detail::densify_row(x, row, buf);
    return detail::tree_predict(nodes_, buf);
  }

  std::vector<int> predict(const FeatureMatrix& x) const {
    std::vector<int> out(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) out[i] = predict_row(x, i);
    return out;
  }

 private:
  bool classify_ = true;
  std::vector<detail::TreeNode> nodes_;
};

// ---------------------------------------------------------------- diag LDA

// Gaussian linear discriminant with pooled per-feature (diagonal) variance.
class DiagLda {
 public:
  static DiagLda fit(const FeatureMatrix& x, const std::vector<int>& y,
                     int n_classes) {
    detail::check_labels(x, y, n_classes);
    DiagLda m;
    const std::size_t d = x.cols(), n = x.rows();
    const std::size_t k = static_cast<std::size_t>(n_classes);
    m.means_.assign(k, std::vector<double>(d, 0.0));
    m.counts_.assign(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t c = static_cast<std::size_t>(y[i]);
      m.counts_[c]++;
      x.for_each_in_row(i, [&](std::size_t j, double v) { m.means_[c][j] += v; });
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (m.counts_[c] == 0) continue;
      for (double& v : m.means_[c]) v /= static_cast<double>(m.counts_[c]);
    }
    // Pooled diagonal variance with a floor against singular features.
    std::vector<double> ssq(d, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      x.for_each_in_row(i, [&](std::size_t j, double v) { ssq[j] += v * v; });
    }
    m.inv_var_.assign(d, 0.0);
    for (std::size_t j = 0; j < d; ++j) {
      double centered = ssq[j];
      for (std::size_t c = 0; c < k; ++c) {
        centered -= static_cast<double>(m.counts_[c]) * m.means_[c][j] * m.means_[c][j];
      }
      double var = std::max(centered / static_cast<double>(n), 0.0) + 1e-6;
      m.inv_var_[j] = 1.0 / var;
    }
    m.offsets_.assign(k, 0.0);
    for (std::size_t c = 0; c < k; ++c) {
      if (m.counts_[c] == 0) {
        m.offsets_[c] = -std::numeric_limits<double>::infinity();
        continue;
      }
      double quad = 0;
      for (std::size_t j = 0; j < d; ++j) {
        quad += m.means_[c][j] * m.means_[c][j] * m.inv_var_[j];
      }
      m.offsets_[c] = -0.5 * quad +
                      std::log(static_cast<double>(m.counts_[c]) /
                               static_cast<double>(n));
    }
    return m;
  }

  int predict_row(const FeatureMatrix& x, std::size_t row) const {
    int best = 0;
    double best_score = -std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < means_.size(); ++c) {
      double s = offsets_[c];
      x.for_each_in_row(row, [&](std::size_t j, double v) {
        s += v * means_[c][j] * inv_var_[j];
      });
      if (s > best_score) {
        best_score = s;
        best = static_cast<int>(c);
      }
    }
    return best;
  }

  std::vector<int> predict(const FeatureMatrix& x) const {
    std::vector<int> out(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) out[i] = predict_row(x, i);
    return out;
  }

 private:
  std::vector<std::vector<double>> means_;
  std::vector<std::size_t> counts_;
  std::vector<double> inv_var_;
  std::vector<double> offsets_;
};

// ---------------------------------------------------------------- naive Bayes

// Multinomial naive Bayes with Laplace smoothing. Inputs with negative
// entries are shifted by the global minimum so counts stay non-negative; the
// shift on implicit zeros is folded into a per-class constant.
class MultinomialNb {
 public:
  static MultinomialNb fit(const FeatureMatrix& x, const std::vector<int>& y,
                           int n_classes) {
    detail::check_labels(x, y, n_classes);
    MultinomialNb m;
    const std::size_t d = x.cols(), n = x.rows();
    const std::size_t k = static_cast<std::size_t>(n_classes);
    double min_v = 0;
    for (std::size_t i = 0; i < n; ++i) {
      x.for_each_in_row(i, [&](std::size_t, double v) { min_v = std::min(min_v, v); });
    }
    m.shift_ = -min_v;

    std::vector<std::vector<double>> counts(k, std::vector<double>(d, 0.0));
    std::vector<std::size_t> class_n(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t c = static_cast<std::size_t>(y[i]);
      class_n[c]++;
      x.for_each_in_row(i, [&](std::size_t j, double v) { counts[c][j] += v; });
    }
    m.log_theta_.assign(k, std::vector<double>(d, 0.0));
    m.log_theta_sum_.assign(k, 0.0);
    m.log_prior_.assign(k, -std::numeric_limits<double>::infinity());
    for (std::size_t c = 0; c < k; ++c) {
      if (class_n[c] == 0) continue;
      double total = 0;
      for (std::size_t j = 0; j < d; ++j) {
        counts[c][j] += m.shift_ * static_cast<double>(class_n[c]);
        total += counts[c][j];
      }
      double denom = std::log(total + static_cast<double>(d));
      for (std::size_t j = 0; j < d; ++j) {
        m.log_theta_[c][j] = std::log(counts[c][j] + 1.0) - denom;
        m.log_theta_sum_[c] += m.log_theta_[c][j];
      }
      m.log_prior_[c] = std::log(static_cast<double>(class_n[c]) /
                                 static_cast<double>(n));
    }
    return m;
  }

  // Joint log-likelihood per class (unnormalized posterior).
  std::vector<double> log_scores(const FeatureMatrix& x, std::size_t row) const {
    std::vector<double> scores(log_theta_.size());
    for (std::size_t c = 0; c < log_theta_.size(); ++c) {
      double s = log_prior_[c] + shift_ * log_theta_sum_[c];
      x.for_each_in_row(row, [&](std::size_t j, double v) {
        s += v * log_theta_[c][j];
      });
      scores[c] = s;
    }
    return scores;
  }

  int predict_row(const FeatureMatrix& x, std::size_t row) const {
    auto scores = log_scores(x, row);
    int best = 0;
    double best_score = -std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < scores.size(); ++c) {
      if (scores[c] > best_score) {
        best_score = scores[c];
        best = static_cast<int>(c);
      }
    }
    return best;
  }

  std::vector<int> predict(const FeatureMatrix& x) const {
    std::vector<int> out(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) out[i] = predict_row(x, i);
    return out;
  }

 private:
  double shift_ = 0;
  std::vector<std::vector<double>> log_theta_;
  std::vector<double> log_theta_sum_;
  std::vector<double> log_prior_;
};

// ---------------------------------------------------------------- landmarkers

enum class Landmarker { kKnn1, kDecisionTree, kDiagLda, kNaiveBayes };

inline constexpr std::size_t kLandmarkTreeDepth = 10;

inline double landmark_accuracy(Landmarker kind, const FeatureMatrix& x_train,
                                const std::vector<int>& y_train, int n_classes,
                                const FeatureMatrix& x_test,
                                const std::vector<int>& y_test) {
  std::vector<int> predicted;
  switch (kind) {
    case Landmarker::kKnn1:
      predicted = Knn1::fit(x_train, y_train, n_classes).predict(x_test);
      break;
    case Landmarker::kDecisionTree: {
      TreeConfig cfg;
      cfg.max_depth = kLandmarkTreeDepth;
      predicted = DecisionTree::fit_classifier(x_train, y_train, n_classes, cfg)
                      .predict(x_test);
      break;
    }
    case Landmarker::kDiagLda:
      predicted = DiagLda::fit(x_train, y_train, n_classes).predict(x_test);
      break;
    case Landmarker::kNaiveBayes:
      predicted = MultinomialNb::fit(x_train, y_train, n_classes).predict(x_test);
      break;
  }
  return accuracy(predicted, y_test);
}

// ---------------------------------------------------------------- forest

struct ForestConfig {
  std::size_t n_trees = 100;
  std::optional<std::size_t> max_depth;
  std::size_t min_samples_leaf = 1;
  // nullopt = sqrt(d) for classification, d/3 for regression.
  std::optional<std::size_t> features_per_split;
  bool bootstrap = true;  // test hook: disable to reproduce a plain CART
  std::uint64_t seed = 13;
};

class RandomForest {
 public:
  static RandomForest fit_classifier(const FeatureMatrix& x,
                                     const std::vector<int>& y, int n_classes,
                                     const ForestConfig& cfg) {
    detail::check_labels(x, y, n_classes);
    return fit_impl(x, &y, nullptr, n_classes, cfg);
  }

  static RandomForest fit_regressor(const FeatureMatrix& x,
                                    const std::vector<double>& y,
                                    const ForestConfig& cfg) {
    if (x.rows() != y.size() || y.empty()) {
      throw ValidationError("forest regressor: bad shapes");
    }
    return fit_impl(x, nullptr, &y, 0, cfg);
  }

  bool is_classifier() const { return classify_; }

  std::vector<std::size_t> class_votes(const std::vector<double>& x) const {
    std::vector<std::size_t> votes(static_cast<std::size_t>(n_classes_), 0);
    for (const auto& tree : trees_) {
      votes[static_cast<std::size_t>(detail::tree_predict(tree, x))]++;
    }
    return votes;
  }

  int predict_class(const std::vector<double>& x) const {
    auto votes = class_votes(x);
    std::size_t best = 0;
    for (std::size_t c = 1; c < votes.size(); ++c) {
      if (votes[c] > votes[best]) best = c;  // ties to the lowest class index
    }
    return static_cast<int>(best);
  }

  double predict_value(const std::vector<double>& x) const {
    double acc = 0;
    for (const auto& tree : trees_) acc += detail::tree_predict(tree, x);
    return acc / static_cast<double>(trees_.size());
  }

  std::vector<int> predict(const FeatureMatrix& x) const {
    std::vector<int> out(x.rows());
    std::vector<double> buf;
    for (std::size_t i = 0; i < x.rows(); ++i) {
      detail::densify_row(x, i, buf);
      out[i] = predict_class(buf);
    }
    return out;
  }

  // Mean decrease in impurity, normalized to sum 1; uniform when no split
  // ever fired (all stump trees).
  std::vector<double> gini_importances() const {
    std::vector<double> imp = raw_importance_;
    double total = 0;
    for (double v : imp) total += v;
    if (total <= 0) {
      double u = 1.0 / static_cast<double>(imp.size());
      for (double& v : imp) v = u;
      return imp;
    }
    for (double& v : imp) v /= total;
    return imp;
  }

  // Out-of-bag accuracy over samples left out of at least one bootstrap.
  double oob_accuracy() const {
    if (!classify_ || !oob_available_) {
      throw ValidationError("oob accuracy requires a bootstrapped classifier");
    }
    return oob_accuracy_;
  }

  std::size_t n_trees() const { return trees_.size(); }

 private:
  static RandomForest fit_impl(const FeatureMatrix& x,
                               const std::vector<int>* y_class,
                               const std::vector<double>* y_reg, int n_classes,
                               const ForestConfig& cfg) {
    if (cfg.n_trees < 1) throw ValidationError("forest: n_trees must be >= 1");
    RandomForest f;
    f.classify_ = y_class != nullptr;
    f.n_classes_ = n_classes;
    auto data = detail::TreeData::from(x);
    const std::size_t n = data.rows, d = data.cols;

    detail::GrowthSpec spec;
    spec.classify = f.classify_;
    spec.n_classes = n_classes;
    spec.max_depth = cfg.max_depth.value_or(std::numeric_limits<std::size_t>::max());
    spec.min_leaf = cfg.min_samples_leaf;
    spec.total_samples = n;
    if (cfg.features_per_split) {
      spec.features_per_split = *cfg.features_per_split;
    } else if (f.classify_) {
      spec.features_per_split = std::max<std::size_t>(
          1, static_cast<std::size_t>(std::sqrt(static_cast<double>(d))));
    } else {
      spec.features_per_split = std::max<std::size_t>(1, d / 3);
    }

    f.raw_importance_.assign(d, 0.0);
    f.trees_.reserve(cfg.n_trees);
    std::vector<std::vector<std::size_t>> oob_votes;
    if (f.classify_ && cfg.bootstrap) {
      oob_votes.assign(n, std::vector<std::size_t>(
                              static_cast<std::size_t>(n_classes), 0));
    }

    for (std::size_t t = 0; t < cfg.n_trees; ++t) {
      Rng rng(mix_seed(cfg.seed, t));
      std::vector<std::size_t> samples;
      std::vector<bool> inbag(n, false);
      if (cfg.bootstrap) {
        samples.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
          samples[i] = rng.below(n);
          inbag[samples[i]] = true;
        }
      } else {
        samples.resize(n);
        for (std::size_t i = 0; i < n; ++i) samples[i] = i;
        inbag.assign(n, true);
      }
      detail::TreeGrower grower(data, y_class, y_reg, spec, &rng,
                                &f.raw_importance_);
      f.trees_.push_back(grower.grow(std::move(samples)));
      if (!oob_votes.empty()) {
        std::vector<double> buf(d);
        for (std::size_t i = 0; i < n; ++i) {
          if (inbag[i]) continue;
          for (std::size_t j = 0; j < d; ++j) buf[j] = data.at(i, j);
          int cls = static_cast<int>(detail::tree_predict(f.trees_.back(), buf));
          oob_votes[i][static_cast<std::size_t>(cls)]++;
        }
      }
    }
    for (double& v : f.raw_importance_) v /= static_cast<double>(cfg.n_trees);

    if (!oob_votes.empty()) {
      std::size_t covered = 0, hits = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t total = 0, best = 0;
        for (std::size_t c = 0; c < oob_votes[i].size(); ++c) {
          total += oob_votes[i][c];
          if (oob_votes[i][c] > oob_votes[i][best]) best = c;
        }
        if (total == 0) continue;
        ++covered;
        if (static_cast<int>(best) == (*y_class)[i]) ++hits;
      }
      f.oob_available_ = covered > 0;
      f.oob_accuracy_ = covered > 0
                            ? static_cast<double>(hits) / static_cast<double>(covered)
                            : 0.0;
    }
    return f;
  }

  bool classify_ = true;
  int n_classes_ = 0;
  std::vector<std::vector<detail::TreeNode>> trees_;
  std::vector<double> raw_importance_;
  bool oob_available_ = false;
  double oob_accuracy_ = 0;
};

inline std::vector<double> gini_importances(const RandomForest& forest) {
  if (forest.n_trees() == 0) {
    throw ValidationError("gini importances require a fitted forest");
  }
  return forest.gini_importances();
}

}  // namespace autotext
