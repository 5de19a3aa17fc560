#include "autotext/learners.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"

using namespace autotext;
using support::dense_features;

namespace {

TEST(LinearSvm, SeparableBlobsPerfectTraining) {
  DenseMatrix x;
  std::vector<int> y;
  support::make_blobs(10, 1.0, 42, x, y);
  auto svm = LinearSvm::fit(dense_features(x), y, 2, {}, 1);
  EXPECT_DOUBLE_EQ(accuracy(svm.predict(dense_features(x)), y), 1.0);
}

TEST(LinearSvm, XorAtMostThreeQuarters) {
  DenseMatrix x(4, 2);
  x(0, 0) = 0; x(0, 1) = 0;
  x(1, 0) = 1; x(1, 1) = 1;
  x(2, 0) = 0; x(2, 1) = 1;
  x(3, 0) = 1; x(3, 1) = 0;
  std::vector<int> y = {0, 0, 1, 1};
  auto svm = LinearSvm::fit(dense_features(x), y, 2, {}, 7);
  EXPECT_LE(accuracy(svm.predict(dense_features(x)), y), 0.75);
}

TEST(LinearSvm, DeterministicGivenSeed) {
  DenseMatrix x;
  std::vector<int> y;
  support::make_blobs(8, 0.5, 3, x, y);
  auto a = LinearSvm::fit(dense_features(x), y, 2, {}, 99);
  auto b = LinearSvm::fit(dense_features(x), y, 2, {}, 99);
  EXPECT_EQ(a.weights(), b.weights());
}

TEST(LinearSvm, SingleClassRejected) {
  DenseMatrix x(3, 1);
  std::vector<int> y = {0, 0, 0};
  EXPECT_THROW(LinearSvm::fit(dense_features(x), y, 2, {}, 1), ValidationError);
}

TEST(LinearSvm, DualObjectiveNonIncreasing) {
  DenseMatrix x;
  std::vector<int> y;
  support::make_blobs(15, 0.2, 8, x, y);
  auto svm = LinearSvm::fit(dense_features(x), y, 2, {}, 5);
  for (const auto& trace : svm.dual_traces()) {
    for (std::size_t e = 1; e < trace.size(); ++e) {
      EXPECT_LE(trace[e], trace[e - 1] + 1e-9)
          << "epoch " << e << " increased the dual objective";
    }
  }
}

TEST(LinearSvm, MulticlassOneVsRest) {
  // Triangle of class centers: every class is linearly separable from the
  // union of the others, which one-vs-rest requires.
  const double cx[3] = {0.0, 6.0, 0.0};
  const double cy[3] = {0.0, 0.0, 6.0};
  DenseMatrix x(12, 2);
  std::vector<int> y(12);
  Rng rng(4);
  for (int c = 0; c < 3; ++c) {
    for (int i = 0; i < 4; ++i) {
      int row = c * 4 + i;
      x(row, 0) = cx[c] + 0.4 * rng.normal();
      x(row, 1) = cy[c] + 0.4 * rng.normal();
      y[row] = c;
    }
  }
  auto svm = LinearSvm::fit(dense_features(x), y, 3, {}, 2);
  EXPECT_GE(accuracy(svm.predict(dense_features(x)), y), 0.9);
}

TEST(Knn1, TrainingSetSelfAccuracy) {
  DenseMatrix x;
  std::vector<int> y;
  support::make_blobs(10, 0.4, 11, x, y);
  auto knn = Knn1::fit(dense_features(x), y, 2);
  EXPECT_DOUBLE_EQ(accuracy(knn.predict(dense_features(x)), y), 1.0);
}

TEST(Knn1, TiesToLowestTrainingIndex) {
  DenseMatrix x(2, 1);
  x(0, 0) = 0.0;
  x(1, 0) = 2.0;
  std::vector<int> y = {0, 1};
  auto knn = Knn1::fit(dense_features(x), y, 2);
  DenseMatrix q(1, 1);
  q(0, 0) = 1.0;  // equidistant
  EXPECT_EQ(knn.predict_row(dense_features(q), 0), 0);
}

TEST(DecisionTree, SingleSplitOnOneDimension) {
  DenseMatrix x(8, 1);
  std::vector<int> y(8);
  for (int i = 0; i < 8; ++i) {
    x(i, 0) = i < 4 ? -1.0 - i : 1.0 + i;
    y[i] = i < 4 ? 0 : 1;
  }
  auto tree = DecisionTree::fit_classifier(dense_features(x), y, 2, {});
  EXPECT_DOUBLE_EQ(accuracy(tree.predict(dense_features(x)), y), 1.0);
}

TEST(DecisionTree, PerfectFitOnDistinctRows) {
  Rng rng(5);
  DenseMatrix x(20, 3);
  for (double& v : x.a) v = rng.normal();
  std::vector<int> y(20);
  for (std::size_t i = 0; i < 20; ++i) y[i] = static_cast<int>(rng.below(3));
  if (std::count(y.begin(), y.end(), y[0]) == 20) y[0] = (y[0] + 1) % 3;
  auto tree = DecisionTree::fit_classifier(dense_features(x), y, 3, {});
  EXPECT_DOUBLE_EQ(accuracy(tree.predict(dense_features(x)), y), 1.0);
}

TEST(DecisionTree, RegressionPredictsLeafMeans) {
  DenseMatrix x(6, 1);
  std::vector<double> y(6);
  for (int i = 0; i < 6; ++i) {
    x(i, 0) = i;
    y[i] = i < 3 ? 1.0 : 5.0;
  }
  TreeConfig cfg;
  cfg.max_depth = 1;
  auto tree = DecisionTree::fit_regressor(dense_features(x), y, cfg);
  EXPECT_DOUBLE_EQ(tree.predict_value_row(dense_features(x), 0), 1.0);
  EXPECT_DOUBLE_EQ(tree.predict_value_row(dense_features(x), 5), 5.0);
}

TEST(DiagLda, SeparatesShiftedGaussians) {
  DenseMatrix x;
  std::vector<int> y;
  support::make_blobs(20, 1.5, 13, x, y);
  auto lda = DiagLda::fit(dense_features(x), y, 2);
  EXPECT_GE(accuracy(lda.predict(dense_features(x)), y), 0.95);
}

TEST(MultinomialNb, HandComputedPosteriors) {
  DenseMatrix x(2, 2);
  x(0, 0) = 3;
  x(1, 1) = 3;
  std::vector<int> y = {0, 1};
  auto nb = MultinomialNb::fit(dense_features(x), y, 2);
  DenseMatrix q(1, 2);
  q(0, 0) = 2;
  auto scores = nb.log_scores(dense_features(q), 0);
  // theta_A = (4/5, 1/5), theta_B = (1/5, 4/5), priors 1/2.
  EXPECT_NEAR(scores[0], std::log(0.5) + 2.0 * std::log(0.8), 1e-9);
  EXPECT_NEAR(scores[1], std::log(0.5) + 2.0 * std::log(0.2), 1e-9);
  EXPECT_EQ(nb.predict_row(dense_features(q), 0), 0);
}

TEST(MultinomialNb, NegativeInputsShifted) {
  DenseMatrix x(4, 2);
  x(0, 0) = -1; x(0, 1) = 2;
  x(1, 0) = -2; x(1, 1) = 3;
  x(2, 0) = 4;  x(2, 1) = -1;
  x(3, 0) = 5;  x(3, 1) = -2;
  std::vector<int> y = {0, 0, 1, 1};
  auto nb = MultinomialNb::fit(dense_features(x), y, 2);
  EXPECT_GE(accuracy(nb.predict(dense_features(x)), y), 0.99);
}

TEST(Landmarkers, AllFourRunOnSparseCounts) {
  auto corpus = support::marker_corpus(10, 77);
  RepresentationSpec spec;
  spec.family = Family::kNgram;
  spec.weighting = Weighting::kTf;
  auto m = vectorize(spec, corpus, corpus, {}, 1);
  auto y = corpus.label_ids();
  for (Landmarker kind : {Landmarker::kKnn1, Landmarker::kDecisionTree,
                          Landmarker::kDiagLda, Landmarker::kNaiveBayes}) {
    double acc = landmark_accuracy(kind, m, y, 2, m, y);
    EXPECT_GE(acc, 0.5);
    EXPECT_LE(acc, 1.0);
  }
}

TEST(RandomForest, DegenerateForestEqualsCart) {
  for (std::uint64_t seed : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}) {
    Rng rng(seed);
    DenseMatrix x(24, 4);
    for (double& v : x.a) v = rng.normal();
    std::vector<int> y(24);
    for (auto& c : y) c = static_cast<int>(rng.below(2));
    if (std::count(y.begin(), y.end(), y[0]) == 24) y[0] = 1 - y[0];

    ForestConfig cfg;
    cfg.n_trees = 1;
    cfg.bootstrap = false;
    cfg.features_per_split = 4;  // all
    cfg.seed = seed;
    auto forest = RandomForest::fit_classifier(dense_features(x), y, 2, cfg);
    auto cart = DecisionTree::fit_classifier(dense_features(x), y, 2, {});

    Rng qrng(seed + 100);
    DenseMatrix q(10, 4);
    for (double& v : q.a) v = qrng.normal();
    EXPECT_EQ(forest.predict(dense_features(q)), cart.predict(dense_features(q)))
        << "seed " << seed;
  }
}

TEST(RandomForest, ConstantRegressionTarget) {
  DenseMatrix x(10, 2);
  Rng rng(3);
  for (double& v : x.a) v = rng.normal();
  std::vector<double> y(10, 3.25);
  ForestConfig cfg;
  cfg.n_trees = 10;
  auto forest = RandomForest::fit_regressor(dense_features(x), y, cfg);
  std::vector<double> q = {0.0, 0.0};
  EXPECT_DOUBLE_EQ(forest.predict_value(q), 3.25);
}

TEST(RandomForest, OobAccuracyHighOnBlobs) {
  DenseMatrix x;
  std::vector<int> y;
  support::make_blobs(40, 1.5, 21, x, y);
  ForestConfig cfg;
  cfg.n_trees = 100;
  cfg.seed = 5;
  auto forest = RandomForest::fit_classifier(dense_features(x), y, 2, cfg);
  EXPECT_GE(forest.oob_accuracy(), 0.95);
}

TEST(RandomForest, SeedStability) {
  DenseMatrix x;
  std::vector<int> y;
  support::make_blobs(30, 1.0, 9, x, y);
  ForestConfig a, b;
  a.seed = 1;
  b.seed = 2;
  auto fa = RandomForest::fit_classifier(dense_features(x), y, 2, a);
  auto fb = RandomForest::fit_classifier(dense_features(x), y, 2, b);
  DenseMatrix q;
  std::vector<int> qy;
  support::make_blobs(25, 1.0, 77, q, qy);
  auto pa = fa.predict(dense_features(q));
  auto pb = fb.predict(dense_features(q));
  std::size_t agree = 0;
  for (std::size_t i = 0; i < pa.size(); ++i) agree += pa[i] == pb[i];
  EXPECT_GE(static_cast<double>(agree) / static_cast<double>(pa.size()), 0.9);
}

TEST(GiniImportance, SumsToOne) {
  DenseMatrix x;
  std::vector<int> y;
  support::make_blobs(20, 1.0, 31, x, y);
  ForestConfig cfg;
  cfg.n_trees = 25;
  auto forest = RandomForest::fit_classifier(dense_features(x), y, 2, cfg);
  auto imp = gini_importances(forest);
  double total = 0;
  for (double v : imp) total += v;
  EXPECT_NEAR(total, 1.0, 1e-9);
}

TEST(GiniImportance, InformativeFeatureDominates) {
  Rng rng(12);
  DenseMatrix x(60, 10);
  std::vector<int> y(60);
  for (std::size_t i = 0; i < 60; ++i) {
    y[i] = i < 30 ? 0 : 1;
    x(i, 0) = (y[i] == 0 ? -2.0 : 2.0) + 0.3 * rng.normal();
    for (std::size_t j = 1; j < 10; ++j) x(i, j) = rng.normal();
  }
  ForestConfig cfg;
  cfg.n_trees = 60;
  auto forest = RandomForest::fit_classifier(dense_features(x), y, 2, cfg);
  auto imp = gini_importances(forest);
  EXPECT_EQ(std::max_element(imp.begin(), imp.end()) - imp.begin(), 0);
}

TEST(GiniImportance, StumpsGiveUniform) {
  DenseMatrix x;
  std::vector<int> y;
  support::make_blobs(10, 1.0, 2, x, y);
  ForestConfig cfg;
  cfg.n_trees = 5;
  cfg.min_samples_leaf = 100;  // no split can satisfy the leaf minimum
  auto forest = RandomForest::fit_classifier(dense_features(x), y, 2, cfg);
  auto imp = gini_importances(forest);
  for (double v : imp) EXPECT_DOUBLE_EQ(v, 0.5);
}

}  // namespace
