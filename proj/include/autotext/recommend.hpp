#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "autotext/knowledgebase.hpp"
#include "autotext/learners.hpp"

namespace autotext {

enum class Strategy { kNearest, kClassify, kRegressError, kRegressRank };

inline const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::kNearest: return "nearest";
    case Strategy::kClassify: return "classify";
    case Strategy::kRegressError: return "regress-error";
    case Strategy::kRegressRank: return "regress-rank";
  }
  return "?";
}

inline Strategy parse_strategy(const std::string& s) {
  if (s == "nearest") return Strategy::kNearest;
  if (s == "classify") return Strategy::kClassify;
  if (s == "regress-error" || s == "regress_error") return Strategy::kRegressError;
  if (s == "regress-rank" || s == "regress_rank") return Strategy::kRegressRank;
  throw ValidationError("unknown strategy: " + s);
}

// ---------------------------------------------------------------- standardizer

// Per-feature z-scoring fitted on the knowledge-base meta matrix. Features
// with zero variance carry no distance information and are dropped.
class Standardizer {
 public:
  static Standardizer fit(const std::vector<std::vector<double>>& rows) {
    if (rows.size() < 2) {
      throw ValidationError("standardizer needs at least 2 rows");
    }
    const std::size_t d = rows.front().size();
    Standardizer s;
    s.mean_.assign(d, 0.0);
    s.std_.assign(d, 0.0);
    const double n = static_cast<double>(rows.size());
    for (const auto& row : rows) {
      for (std::size_t j = 0; j < d; ++j) s.mean_[j] += row[j];
    }
    for (double& m : s.mean_) m /= n;
    for (const auto& row : rows) {
      for (std::size_t j = 0; j < d; ++j) {
        double diff = row[j] - s.mean_[j];
        s.std_[j] += diff * diff;
      }
    }
    for (std::size_t j = 0; j < d; ++j) {
      s.std_[j] = std::sqrt(s.std_[j] / n);
      if (s.std_[j] > 0) {
        s.kept_.push_back(j);
      } else {
        s.dropped_.push_back(j);
      }
    }
    return s;
  }

  // Standardized vector over kept features only.
  std::vector<double> transform(const std::vector<double>& v) const {
    if (v.size() != mean_.size()) {
      throw ValidationError("standardizer: dimension mismatch");
    }
    std::vector<double> out;
    out.reserve(kept_.size());
    for (std::size_t j : kept_) {
      out.push_back((v[j] - mean_[j]) / std_[j]);
    }
    return out;
  }

  const std::vector<std::size_t>& kept_features() const { return kept_; }
  const std::vector<std::size_t>& dropped_features() const { return dropped_; }

 private:
  std::vector<double> mean_;
  std::vector<double> std_;
  std::vector<std::size_t> kept_;
  std::vector<std::size_t> dropped_;
};

// ---------------------------------------------------------------- result

struct Recommendation {
  Strategy strategy = Strategy::kNearest;
  int representation_id = -1;
  std::uint64_t seed = 0;
  // Strategy 1: distance to every KB corpus. Strategies 3-4: one predicted
  // value per candidate representation. Strategy 2: votes per candidate.
  std::vector<double> distances;
  std::vector<double> predicted_errors;
  std::vector<double> predicted_accuracies;
  std::vector<double> predicted_ranks;
  std::vector<double> class_votes;  // indexed by representation id
  std::optional<std::size_t> nearest_corpus;
  bool degenerate = false;  // strategy 2 fallback: single training class

  nlohmann::json to_json(const RepresentationRegistry& registry) const {
    nlohmann::json j;
    j["strategy"] = to_string(strategy);
    j["representation_id"] = representation_id;
    j["representation"] = registry.at(representation_id).describe();
    j["seed"] = seed;
    nlohmann::json diag;
    if (!distances.empty()) {
      diag["distances"] = distances;
      diag["nearest_corpus"] = nearest_corpus ? static_cast<int>(*nearest_corpus) : -1;
    }
    if (!predicted_errors.empty()) diag["predicted_errors"] = predicted_errors;
    if (!predicted_accuracies.empty()) {
      diag["predicted_accuracies"] = predicted_accuracies;
    }
    if (!predicted_ranks.empty()) diag["predicted_ranks"] = predicted_ranks;
    if (!class_votes.empty()) diag["class_votes"] = class_votes;
    if (degenerate) diag["degenerate_single_class"] = true;
    j["diagnostics"] = diag;
    return j;
  }
};

// ---------------------------------------------------------------- a view

// Optional restriction of the meta matrix to a feature subset (used by the
// subset-comparison experiments). Empty subset = all 72 features.
struct MetaView {
  std::vector<std::size_t> columns;

  static MetaView all() { return {}; }

  static MetaView from_names(const std::vector<std::string>& names) {
    MetaView v;
    for (const auto& n : names) v.columns.push_back(metafeature_index(n));
    return v;
  }

  std::vector<double> project(const std::vector<double>& row) const {
    if (columns.empty()) return row;
    std::vector<double> out;
    out.reserve(columns.size());
    for (std::size_t j : columns) out.push_back(row[j]);
    return out;
  }

  std::vector<std::vector<double>> project_all(
      const std::vector<std::vector<double>>& rows) const {
    std::vector<std::vector<double>> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(project(r));
    return out;
  }
};

namespace detail {

inline FeatureMatrix rows_to_matrix(const std::vector<std::vector<double>>& rows) {
  FeatureMatrix m;
  m.is_sparse = false;
  m.dense = DenseMatrix(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.dense(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace detail

// ---------------------------------------------------------------- strategies

// Strategy (1): adopt the best representation of the nearest corpus,
// Euclidean distance over standardized kept features, ties to the lowest
// corpus index then the lowest representation id.
inline Recommendation recommend_nearest(const KnowledgeBase& kb,
                                        const std::vector<double>& meta,
                                        const MetaView& view = {}) {
  auto projected = view.project_all(kb.meta);
  Standardizer std_ = Standardizer::fit(projected);
  auto query = std_.transform(view.project(meta));

  Recommendation rec;
  rec.strategy = Strategy::kNearest;
  rec.distances.resize(kb.n_corpora());
  double best = std::numeric_limits<double>::infinity();
  std::size_t best_i = 0;
  for (std::size_t i = 0; i < kb.n_corpora(); ++i) {
    auto row = std_.transform(projected[i]);
    double d2 = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      double diff = row[j] - query[j];
      d2 += diff * diff;
    }
    rec.distances[i] = std::sqrt(d2);
    if (rec.distances[i] < best) {
      best = rec.distances[i];
      best_i = i;
    }
  }
  rec.nearest_corpus = best_i;
  rec.representation_id = kb.best_representation(best_i);
  return rec;
}

// Strategy (2): random-forest classification, class = best representation.
// A knowledge base where every row shares one best representation returns it
// directly.
inline Recommendation recommend_classify(const KnowledgeBase& kb,
                                         const std::vector<double>& meta,
                                         const ForestConfig& cfg,
                                         const MetaView& view = {}) {
  Recommendation rec;
  rec.strategy = Strategy::kClassify;
  rec.seed = cfg.seed;

  std::vector<int> targets(kb.n_corpora());
  for (std::size_t i = 0; i < kb.n_corpora(); ++i) {
    targets[i] = kb.best_representation(i);
  }
  std::vector<int> classes = targets;
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());

  if (classes.size() == 1) {
    rec.degenerate = true;
    rec.representation_id = classes.front();
    return rec;
  }

  auto projected = view.project_all(kb.meta);
  Standardizer std_ = Standardizer::fit(projected);
  std::vector<std::vector<double>> rows;
  rows.reserve(projected.size());
  for (const auto& r : projected) rows.push_back(std_.transform(r));

  // Class indices are positions in the ascending id list, so vote ties
  // resolve to the lowest representation id.
  std::vector<int> y(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    y[i] = static_cast<int>(
        std::lower_bound(classes.begin(), classes.end(), targets[i]) -
        classes.begin());
  }
  auto forest = RandomForest::fit_classifier(
      detail::rows_to_matrix(rows), y, static_cast<int>(classes.size()), cfg);
  auto query = std_.transform(view.project(meta));
  int cls = forest.predict_class(query);
  rec.representation_id = classes[static_cast<std::size_t>(cls)];
  // Vote fractions over all candidates; ids outside the training classes
  // stay at zero.
  rec.class_votes.assign(kb.n_representations(), 0.0);
  auto votes = forest.class_votes(query);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    rec.class_votes[static_cast<std::size_t>(classes[c])] =
        static_cast<double>(votes[c]) / static_cast<double>(forest.n_trees());
  }
  return rec;
}

namespace detail {

// Shared core of strategies (3) and (4): one forest regressor per
// representation, argmin of the predicted target.
inline Recommendation recommend_regress(const KnowledgeBase& kb,
                                        const std::vector<double>& meta,
                                        const ForestConfig& cfg,
                                        const MetaView& view, bool rank_target) {
  Recommendation rec;
  rec.strategy = rank_target ? Strategy::kRegressRank : Strategy::kRegressError;
  rec.seed = cfg.seed;

  auto projected = view.project_all(kb.meta);
  Standardizer std_ = Standardizer::fit(projected);
  std::vector<std::vector<double>> rows;
  rows.reserve(projected.size());
  for (const auto& r : projected) rows.push_back(std_.transform(r));
  FeatureMatrix x = rows_to_matrix(rows);
  auto query = std_.transform(view.project(meta));

  const std::size_t reps = kb.n_representations();
  std::vector<double> predicted(reps, 0.0);
  for (std::size_t r = 0; r < reps; ++r) {
    std::vector<double> targets(kb.n_corpora());
    for (std::size_t i = 0; i < kb.n_corpora(); ++i) {
      targets[i] = rank_target ? kb.rank[i][r] : 1.0 - kb.accuracy[i][r];
    }
    ForestConfig per_rep = cfg;
    per_rep.seed = mix_seed(cfg.seed, r);
    auto forest = RandomForest::fit_regressor(x, targets, per_rep);
    predicted[r] = forest.predict_value(query);
  }
  std::size_t best = 0;
  for (std::size_t r = 1; r < reps; ++r) {
    if (predicted[r] < predicted[best]) best = r;  // ties to the lowest id
  }
  rec.representation_id = static_cast<int>(best);
  if (rank_target) {
    rec.predicted_ranks = std::move(predicted);
  } else {
    rec.predicted_errors = predicted;
    rec.predicted_accuracies.resize(reps);
    for (std::size_t r = 0; r < reps; ++r) {
      rec.predicted_accuracies[r] = 1.0 - predicted[r];
    }
  }
  return rec;
}

}  // namespace detail

// Strategy (3): regress error = 1 - accuracy per representation, recommend
// the smallest predicted error.
inline Recommendation recommend_regress_error(const KnowledgeBase& kb,
                                              const std::vector<double>& meta,
                                              const ForestConfig& cfg,
                                              const MetaView& view = {}) {
  return detail::recommend_regress(kb, meta, cfg, view, false);
}

// Strategy (4): regress the rank per representation, recommend the best
// (lowest) predicted rank.
inline Recommendation recommend_regress_rank(const KnowledgeBase& kb,
                                             const std::vector<double>& meta,
                                             const ForestConfig& cfg,
                                             const MetaView& view = {}) {
  return detail::recommend_regress(kb, meta, cfg, view, true);
}

inline Recommendation recommend(const KnowledgeBase& kb, Strategy strategy,
                                const std::vector<double>& meta,
                                const ForestConfig& cfg,
                                const MetaView& view = {}) {
  switch (strategy) {
    case Strategy::kNearest:
      return recommend_nearest(kb, meta, view);
    case Strategy::kClassify:
      return recommend_classify(kb, meta, cfg, view);
    case Strategy::kRegressError:
      return recommend_regress_error(kb, meta, cfg, view);
    case Strategy::kRegressRank:
      return recommend_regress_rank(kb, meta, cfg, view);
  }
  throw ValidationError("unknown strategy");
}

}  // namespace autotext
