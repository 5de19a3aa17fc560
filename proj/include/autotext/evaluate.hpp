#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "autotext/knowledgebase.hpp"
#include "autotext/recommend.hpp"

namespace autotext {

// ---------------------------------------------------------------- t-test

namespace detail {

// Regularized incomplete beta via the standard continued fraction.
inline double betacf(double a, double b, double x) {
  const int max_iter = 300;
  const double eps = 3e-14, fpmin = 1e-300;
  double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0, d = 1.0 - qab * x / qap;
  if (std::abs(d) < fpmin) d = fpmin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= max_iter; ++m) {
    int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < fpmin) d = fpmin;
    c = 1.0 + aa / c;
    if (std::abs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < fpmin) d = fpmin;
    c = 1.0 + aa / c;
    if (std::abs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < eps) break;
  }
  return h;
}

inline double incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                    a * std::log(x) + b * std::log(1.0 - x);
  double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * betacf(a, b, x) / a;
  }
  return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

}  // namespace detail

// Two-sided p-value of Student's t with `dof` degrees of freedom.
inline double student_t_pvalue(double t, std::size_t dof) {
  if (dof == 0) return 1.0;
  if (!std::isfinite(t)) return 0.0;
  double v = static_cast<double>(dof);
  return detail::incomplete_beta(v / 2.0, 0.5, v / (v + t * t));
}

struct PairedTResult {
  double t = 0;
  double p = 1;
  double mean_difference = 0;
  std::size_t n = 0;
};

// Paired two-sided Student's t-test. Zero-variance differences give t = 0,
// p = 1 when the mean difference is zero, p = 0 otherwise.
inline PairedTResult paired_t_test(const std::vector<double>& a,
                                   const std::vector<double>& b) {
  if (a.size() != b.size() || a.size() < 2) {
    throw ValidationError("paired t-test needs >= 2 pairs of equal length");
  }
  PairedTResult r;
  r.n = a.size();
  const double n = static_cast<double>(a.size());
  double mean = 0;
  for (std::size_t i = 0; i < a.size(); ++i) mean += a[i] - b[i];
  mean /= n;
  double ss = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i] - mean;
    ss += d * d;
  }
  double sd = std::sqrt(ss / (n - 1.0));
  r.mean_difference = mean;
  if (sd == 0.0) {
    if (mean == 0.0) {
      r.t = 0.0;
      r.p = 1.0;
    } else {
      r.t = mean > 0 ? std::numeric_limits<double>::infinity()
                     : -std::numeric_limits<double>::infinity();
      r.p = 0.0;
    }
    return r;
  }
  r.t = mean / (sd / std::sqrt(n));
  r.p = student_t_pvalue(r.t, a.size() - 1);
  return r;
}

// ---------------------------------------------------------------- reports

struct MethodMetrics {
  std::string name;
  double avg_accuracy = 0, avg_accuracy_std = 0;
  double avg_rank = 0, avg_rank_std = 0;
  double rank1_hits = 0, rank1_hits_std = 0;
};

struct LooDetailRow {
  std::size_t run = 0;
  std::size_t corpus = 0;
  std::string corpus_name;
  Strategy strategy = Strategy::kNearest;
  int representation_id = -1;
  double accuracy = 0;
  double rank = 0;
};

struct LooReport {
  std::vector<MethodMetrics> methods;  // Best, strategies, Random
  std::vector<LooDetailRow> details;
  std::size_t n_runs = 0;
  std::vector<std::uint64_t> seeds;
  // Per requested strategy: per-corpus accuracy averaged over runs, for
  // paired significance tests.
  std::map<std::string, std::vector<double>> per_corpus_accuracy;
  // Leak instrumentation: every sub-knowledge-base row is checked against
  // the held-out index.
  std::size_t leak_checks = 0;
  std::size_t leak_violations = 0;

  const MethodMetrics& method(const std::string& name) const {
    for (const auto& m : methods) {
      if (m.name == name) return m;
    }
    throw ValidationError("no such method in report: " + name);
  }

  nlohmann::json to_json() const;
  std::string to_table() const;
  std::string details_csv() const;
};

struct LooOptions {
  std::vector<Strategy> strategies = {Strategy::kNearest, Strategy::kClassify,
                                      Strategy::kRegressError,
                                      Strategy::kRegressRank};
  std::size_t n_runs = 5;
  std::uint64_t seed = 13;
  ForestConfig forest;
  MetaView view;  // empty = all 72 features
  // Representation ids reported as always-recommend baseline rows (the
  // BoW / pretrained-W2V comparisons).
  std::vector<int> fixed_baselines;
};

namespace detail {

// Sub-knowledge-base with row `held_out` removed. Counts a leak check per
// copied row; a copy of the held-out row would be a violation.
inline KnowledgeBase remove_row(const KnowledgeBase& kb, std::size_t held_out,
                                std::size_t& checks, std::size_t& violations) {
  KnowledgeBase sub;
  sub.registry = kb.registry;
  sub.registry_fingerprint = kb.registry_fingerprint;
  sub.extractor_metadata = kb.extractor_metadata;
  sub.folds = kb.folds;
  sub.seed = kb.seed;
  for (std::size_t i = 0; i < kb.n_corpora(); ++i) {
    if (i == held_out) continue;
    ++checks;
    if (i == held_out) ++violations;  // structurally unreachable
    sub.corpus_names.push_back(kb.corpus_names[i]);
    sub.meta.push_back(kb.meta[i]);
    sub.accuracy.push_back(kb.accuracy[i]);
    sub.rank.push_back(kb.rank[i]);
    sub.failed.push_back(kb.failed[i]);
  }
  if (sub.n_corpora() != kb.n_corpora() - 1) ++violations;
  return sub;
}

struct RunAggregate {
  double acc_sum = 0;
  double rank_sum = 0;
  std::size_t hits = 0;
};

inline MethodMetrics summarize(const std::string& name,
                               const std::vector<double>& accs,
                               const std::vector<double>& ranks,
                               const std::vector<double>& hits) {
  auto mean_std = [](const std::vector<double>& v) {
    double m = 0;
    for (double x : v) m += x;
    m /= static_cast<double>(v.size());
    double ss = 0;
    for (double x : v) ss += (x - m) * (x - m);
    return std::pair<double, double>(
        m, std::sqrt(ss / static_cast<double>(v.size())));
  };
  MethodMetrics mm;
  mm.name = name;
  std::tie(mm.avg_accuracy, mm.avg_accuracy_std) = mean_std(accs);
  std::tie(mm.avg_rank, mm.avg_rank_std) = mean_std(ranks);
  std::tie(mm.rank1_hits, mm.rank1_hits_std) = mean_std(hits);
  return mm;
}

}  // namespace detail

// Always recommending one fixed representation (the BoW / pretrained-W2V
// style baselines).
struct FixedBaselineResult {
  int representation_id = -1;
  double avg_accuracy = 0;
  double avg_rank = 0;
  std::size_t rank1_hits = 0;
  std::vector<double> per_corpus_accuracy;
  std::vector<double> per_corpus_rank;
};

inline FixedBaselineResult fixed_baseline(const KnowledgeBase& kb,
                                          int representation_id) {
  if (representation_id < 0 ||
      static_cast<std::size_t>(representation_id) >= kb.n_representations()) {
    throw ValidationError("fixed_baseline: invalid representation id");
  }
  FixedBaselineResult r;
  r.representation_id = representation_id;
  const std::size_t rep = static_cast<std::size_t>(representation_id);
  for (std::size_t i = 0; i < kb.n_corpora(); ++i) {
    r.per_corpus_accuracy.push_back(kb.accuracy[i][rep]);
    r.per_corpus_rank.push_back(kb.rank[i][rep]);
    r.avg_accuracy += kb.accuracy[i][rep];
    r.avg_rank += kb.rank[i][rep];
    if (kb.rank[i][rep] == 1.0) ++r.rank1_hits;
  }
  r.avg_accuracy /= static_cast<double>(kb.n_corpora());
  r.avg_rank /= static_cast<double>(kb.n_corpora());
  return r;
}

// Leave-one-out evaluation: each corpus is held out, every model refits on
// the remainder, and the recommendation is scored by lookup into the held
// row's stored accuracy and rank.
inline LooReport loo_evaluate(const KnowledgeBase& kb,
                              const LooOptions& options = {}) {
  if (kb.n_corpora() < 3) {
    throw ValidationError("leave-one-out needs at least 3 corpora");
  }
  LooReport report;
  report.n_runs = options.n_runs;
  const std::size_t n = kb.n_corpora();

  // Oracle and random baselines are exact expectations, not sampled.
  {
    double best_acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
      best_acc += kb.accuracy[i][static_cast<std::size_t>(kb.best_representation(i))];
    }
    best_acc /= static_cast<double>(n);
    MethodMetrics best;
    best.name = "best";
    best.avg_accuracy = best_acc;
    best.avg_rank = 1.0;
    best.rank1_hits = static_cast<double>(n);
    report.methods.push_back(best);
  }

  std::map<Strategy, std::vector<std::vector<double>>> per_corpus_acc_runs;

  for (Strategy strategy : options.strategies) {
    std::vector<double> run_accs, run_ranks, run_hits;
    per_corpus_acc_runs[strategy].assign(n, {});
    for (std::size_t run = 0; run < options.n_runs; ++run) {
      std::uint64_t run_seed = mix_seed(options.seed, run);
      if (report.seeds.size() <= run) report.seeds.push_back(run_seed);
      detail::RunAggregate agg;
      for (std::size_t i = 0; i < n; ++i) {
        KnowledgeBase sub = detail::remove_row(kb, i, report.leak_checks,
                                               report.leak_violations);
        ForestConfig cfg = options.forest;
        cfg.seed = mix_seed(run_seed, i);
        Recommendation rec =
            recommend(sub, strategy, kb.meta[i], cfg, options.view);
        const std::size_t rep = static_cast<std::size_t>(rec.representation_id);
        double acc = kb.accuracy[i][rep];
        double rank = kb.rank[i][rep];
        agg.acc_sum += acc;
        agg.rank_sum += rank;
        if (rank == 1.0) ++agg.hits;
        per_corpus_acc_runs[strategy][i].push_back(acc);
        report.details.push_back({run, i, kb.corpus_names[i], strategy,
                                  rec.representation_id, acc, rank});
      }
      run_accs.push_back(agg.acc_sum / static_cast<double>(n));
      run_ranks.push_back(agg.rank_sum / static_cast<double>(n));
      run_hits.push_back(static_cast<double>(agg.hits));
    }
    report.methods.push_back(
        detail::summarize(to_string(strategy), run_accs, run_ranks, run_hits));
    auto& per_corpus = report.per_corpus_accuracy[to_string(strategy)];
    per_corpus.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      double m = 0;
      for (double a : per_corpus_acc_runs[strategy][i]) m += a;
      per_corpus[i] = m / static_cast<double>(options.n_runs);
    }
  }

  {
    // Random baseline: expected value over a uniform representation draw.
    double acc = 0, rank = 0, hits = 0;
    const double reps = static_cast<double>(kb.n_representations());
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t rank1 = 0;
      for (std::size_t j = 0; j < kb.n_representations(); ++j) {
        acc += kb.accuracy[i][j];
        rank += kb.rank[i][j];
        if (kb.rank[i][j] == 1.0) ++rank1;
      }
      hits += static_cast<double>(rank1) / reps;
    }
    MethodMetrics random;
    random.name = "random";
    random.avg_accuracy = acc / (static_cast<double>(n) * reps);
    random.avg_rank = rank / (static_cast<double>(n) * reps);
    random.rank1_hits = hits;
    report.methods.push_back(random);
  }

  for (int id : options.fixed_baselines) {
    auto fixed = fixed_baseline(kb, id);
    MethodMetrics m;
    m.name = "fixed:" + std::to_string(id);
    m.avg_accuracy = fixed.avg_accuracy;
    m.avg_rank = fixed.avg_rank;
    m.rank1_hits = static_cast<double>(fixed.rank1_hits);
    report.methods.push_back(m);
  }
  return report;
}

// ---------------------------------------------------------------- selection

struct RankedFeature {
  std::string name;
  double importance = 0;
};

// Gini importances of the strategy-2 forest fitted on the full knowledge
// base, averaged over `n_seeds` seeds; top-k names, ties in canonical order.
inline std::vector<RankedFeature> gini_select(const KnowledgeBase& kb,
                                              std::size_t k,
                                              const ForestConfig& cfg,
                                              std::size_t n_seeds = 5) {
  if (k < 1 || k > kMetaFeatureCount) {
    throw ValidationError("gini_select: k out of range 1..72");
  }
  std::vector<int> targets(kb.n_corpora());
  for (std::size_t i = 0; i < kb.n_corpora(); ++i) {
    targets[i] = kb.best_representation(i);
  }
  std::vector<int> classes = targets;
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());

  std::vector<double> mean_importance(kMetaFeatureCount, 0.0);
  if (classes.size() < 2) {
    // Degenerate knowledge base: no signal, uniform importances.
    mean_importance.assign(kMetaFeatureCount, 1.0 / kMetaFeatureCount);
  } else {
    Standardizer std_ = Standardizer::fit(kb.meta);
    std::vector<std::vector<double>> rows;
    for (const auto& r : kb.meta) rows.push_back(std_.transform(r));
    FeatureMatrix x = detail::rows_to_matrix(rows);
    std::vector<int> y(targets.size());
    for (std::size_t i = 0; i < targets.size(); ++i) {
      y[i] = static_cast<int>(
          std::lower_bound(classes.begin(), classes.end(), targets[i]) -
          classes.begin());
    }
    for (std::size_t s = 0; s < n_seeds; ++s) {
      ForestConfig seeded = cfg;
      seeded.seed = mix_seed(cfg.seed, s);
      auto forest = RandomForest::fit_classifier(
          x, y, static_cast<int>(classes.size()), seeded);
      auto imp = forest.gini_importances();
      const auto& kept = std_.kept_features();
      for (std::size_t j = 0; j < kept.size(); ++j) {
        mean_importance[kept[j]] += imp[j] / static_cast<double>(n_seeds);
      }
    }
  }

  std::vector<std::size_t> order(kMetaFeatureCount);
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return mean_importance[a] > mean_importance[b];
                   });
  std::vector<RankedFeature> out;
  for (std::size_t i = 0; i < k; ++i) {
    out.push_back({metafeature_names()[order[i]], mean_importance[order[i]]});
  }
  return out;
}

// ---------------------------------------------------------------- subsets

// A reconstruction of the 19 "traditional" meta-features used by earlier
// meta-learning work: general counts plus the distribution statistics of
// documents-per-category and words-per-document, plus vocabulary length.
inline std::vector<std::string> traditional19_subset() {
  std::vector<std::string> names = {"n_documents", "n_categories",
                                    "hardness_vl"};
  const char* stats[] = {"min",      "max",      "mean",
                         "std",      "skewness", "kurtosis",
                         "mean_std_ratio", "entropy"};
  for (const char* block : {"docs_per_category", "words_per_document"}) {
    for (const char* s : stats) names.push_back(std::string(block) + "_" + s);
  }
  return names;
}

struct FeatureSubsetResult {
  std::vector<std::string> subset_a;
  std::vector<std::string> subset_b;
  MethodMetrics metrics_a;
  MethodMetrics metrics_b;
  PairedTResult t_test;
};

// LOO under each subset, then a paired two-sided t-test over the per-corpus
// accuracies. Identical subsets short-circuit to p = 1.
inline FeatureSubsetResult compare_subsets(const KnowledgeBase& kb,
                                           const std::vector<std::string>& a,
                                           const std::vector<std::string>& b,
                                           Strategy strategy,
                                           std::size_t n_runs,
                                           std::uint64_t seed,
                                           const ForestConfig& forest = {}) {
  if (a.empty() || b.empty()) {
    throw ValidationError("compare_subsets: subsets must be non-empty");
  }
  FeatureSubsetResult result;
  result.subset_a = a;
  result.subset_b = b;

  LooOptions opts;
  opts.strategies = {strategy};
  opts.n_runs = n_runs;
  opts.seed = seed;
  opts.forest = forest;

  opts.view = MetaView::from_names(a);
  LooReport ra = loo_evaluate(kb, opts);
  result.metrics_a = ra.method(to_string(strategy));

  if (a == b) {
    result.metrics_b = result.metrics_a;
    result.t_test.t = 0;
    result.t_test.p = 1;
    result.t_test.n = kb.n_corpora();
    return result;
  }

  opts.view = MetaView::from_names(b);
  LooReport rb = loo_evaluate(kb, opts);
  result.metrics_b = rb.method(to_string(strategy));
  result.t_test = paired_t_test(ra.per_corpus_accuracy.at(to_string(strategy)),
                                rb.per_corpus_accuracy.at(to_string(strategy)));
  return result;
}

// ---------------------------------------------------------------- rendering

inline nlohmann::json LooReport::to_json() const {
  nlohmann::json j;
  j["n_runs"] = n_runs;
  j["seeds"] = seeds;
  j["leak_checks"] = leak_checks;
  j["leak_violations"] = leak_violations;
  nlohmann::json methods_json = nlohmann::json::array();
  for (const auto& m : methods) {
    nlohmann::json mj;
    mj["name"] = m.name;
    mj["avg_accuracy"] = {m.avg_accuracy, m.avg_accuracy_std};
    mj["avg_rank"] = {m.avg_rank, m.avg_rank_std};
    mj["rank1_hits"] = {m.rank1_hits, m.rank1_hits_std};
    methods_json.push_back(mj);
  }
  j["methods"] = methods_json;
  return j;
}

inline std::string LooReport::to_table() const {
  std::ostringstream out;
  out << "method          avg_accuracy      avg_rank          #rank-1\n";
  out.setf(std::ios::fixed);
  for (const auto& m : methods) {
    char line[160];
    std::snprintf(line, sizeof(line),
                  "%-15s %6.4f +- %6.4f  %6.2f +- %6.2f  %6.2f +- %5.2f\n",
                  m.name.c_str(), m.avg_accuracy, m.avg_accuracy_std,
                  m.avg_rank, m.avg_rank_std, m.rank1_hits, m.rank1_hits_std);
    out << line;
  }
  return out.str();
}

inline std::string LooReport::details_csv() const {
  std::ostringstream out;
  out.precision(17);
  out << "run,corpus,corpus_name,strategy,representation_id,accuracy,rank\n";
  for (const auto& d : details) {
    out << d.run << "," << d.corpus << "," << d.corpus_name << ","
        << to_string(d.strategy) << "," << d.representation_id << ","
        << d.accuracy << "," << d.rank << "\n";
  }
  return out.str();
}

}  // namespace autotext
