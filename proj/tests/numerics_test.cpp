#include "autotext/numerics.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "test_support.hpp"

using namespace autotext;

namespace {

TEST(StatsBlock, SmallSymmetricCase) {
  auto s = stats_block({1, 2, 3});
  EXPECT_DOUBLE_EQ(s.min, 1.0);
  EXPECT_DOUBLE_EQ(s.max, 3.0);
  EXPECT_DOUBLE_EQ(s.mean, 2.0);
  EXPECT_NEAR(s.std_dev, std::sqrt(2.0 / 3.0), 1e-12);
  EXPECT_NEAR(s.skewness, 0.0, 1e-12);
}

TEST(StatsBlock, ConstantVector) {
  auto s = stats_block({4, 4, 4, 4});
  EXPECT_DOUBLE_EQ(s.std_dev, 0.0);
  EXPECT_DOUBLE_EQ(s.skewness, 0.0);
  EXPECT_DOUBLE_EQ(s.kurtosis, 0.0);
  EXPECT_DOUBLE_EQ(s.mean_std_ratio, 0.0);
  EXPECT_NEAR(s.entropy, 2.0, 1e-12);
}

TEST(StatsBlock, HandComputedEntropy) {
  // p = (0.125, 0.125, 0.25, 0.5) -> 1.75 bits
  auto s = stats_block({1, 1, 2, 4});
  EXPECT_NEAR(s.entropy, 1.75, 1e-12);
}

TEST(StatsBlock, EmptyRejected) {
  EXPECT_THROW(stats_block({}), ValidationError);
}

TEST(StatsBlock, PermutationInvariant) {
  std::vector<double> v = {3.5, -1, 0, 7, 2, 2, 9.25};
  auto a = stats_block(v);
  std::reverse(v.begin(), v.end());
  auto b = stats_block(v);
  EXPECT_DOUBLE_EQ(a.mean, b.mean);
  EXPECT_DOUBLE_EQ(a.std_dev, b.std_dev);
  EXPECT_DOUBLE_EQ(a.skewness, b.skewness);
  EXPECT_DOUBLE_EQ(a.kurtosis, b.kurtosis);
  EXPECT_DOUBLE_EQ(a.entropy, b.entropy);
}

TEST(StatsBlock, NegativesClampedInEntropy) {
  auto s = stats_block({-5, 1, 1});
  EXPECT_NEAR(s.entropy, 1.0, 1e-12);  // mass only on the two ones
}

TEST(TruncatedSvd, DiagonalMatrix) {
  auto m = SparseMatrix::from_rows(
      3, {{{0, 3.0}}, {{1, 2.0}}, {{2, 1.0}}});
  auto svd = truncated_svd(m, 2, 7);
  ASSERT_EQ(svd.singular_values.size(), 2u);
  EXPECT_NEAR(svd.singular_values[0], 3.0, 1e-9);
  EXPECT_NEAR(svd.singular_values[1], 2.0, 1e-9);
}

TEST(TruncatedSvd, RankOneOuterProduct) {
  std::vector<double> u = {1, 2, 2};  // norm 3
  std::vector<double> v = {3, 4};     // norm 5
  std::vector<std::vector<std::pair<std::size_t, double>>> rows(3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 2; ++j) rows[i].push_back({j, u[i] * v[j]});
  }
  auto m = SparseMatrix::from_rows(2, rows);
  auto svd = truncated_svd(m, 1, 5);
  EXPECT_NEAR(svd.singular_values[0], 15.0, 1e-9);
}

TEST(TruncatedSvd, MatchesDenseOracle) {
  auto dense = support::random_decaying_matrix(50, 30, 0.8, 123);
  auto sparse = support::to_sparse(dense);
  auto svd = truncated_svd(sparse, 5, 99);
  auto exact = oracle::dense_singular_values(dense);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_NEAR(svd.singular_values[i], exact[i], 1e-3 * exact[i])
        << "component " << i;
  }
}

TEST(TruncatedSvd, FactorsOrthonormal) {
  auto dense = support::random_decaying_matrix(40, 25, 0.7, 9);
  auto svd = truncated_svd(support::to_sparse(dense), 4, 11);
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      double du = 0, dv = 0;
      for (std::size_t i = 0; i < 40; ++i) du += svd.u(i, a) * svd.u(i, b);
      for (std::size_t j = 0; j < 25; ++j) dv += svd.v(j, a) * svd.v(j, b);
      double want = a == b ? 1.0 : 0.0;
      EXPECT_NEAR(du, want, 1e-6);
      EXPECT_NEAR(dv, want, 1e-6);
    }
  }
}

TEST(TruncatedSvd, ReconstructsRankKTruncation) {
  auto dense = support::random_decaying_matrix(30, 20, 0.6, 31);
  const std::size_t k = 6;
  auto svd = truncated_svd(support::to_sparse(dense), k, 3);
  auto exact = oracle::dense_singular_values(dense);
  double frob = 0, tail = 0;
  for (std::size_t i = 0; i < exact.size(); ++i) {
    frob += exact[i] * exact[i];
    if (i >= k) tail += exact[i] * exact[i];
  }
  double err = 0;
  for (std::size_t i = 0; i < 30; ++i) {
    for (std::size_t j = 0; j < 20; ++j) {
      double rec = 0;
      for (std::size_t c = 0; c < k; ++c) {
        rec += svd.u(i, c) * svd.singular_values[c] * svd.v(j, c);
      }
      err += (dense(i, j) - rec) * (dense(i, j) - rec);
    }
  }
  EXPECT_LE(std::sqrt(err), std::sqrt(frob) * (std::sqrt(tail / frob) + 1e-6));
}

TEST(TruncatedSvd, KOutOfRangeRejected) {
  auto m = SparseMatrix::from_rows(2, {{{0, 1.0}}, {{1, 1.0}}});
  EXPECT_THROW(truncated_svd(m, 0, 1), ValidationError);
  EXPECT_THROW(truncated_svd(m, 3, 1), ValidationError);
}

TEST(TruncatedSvd, DeterministicGivenSeed) {
  auto dense = support::random_decaying_matrix(20, 12, 0.7, 55);
  auto sparse = support::to_sparse(dense);
  auto a = truncated_svd(sparse, 3, 42);
  auto b = truncated_svd(sparse, 3, 42);
  EXPECT_EQ(a.singular_values, b.singular_values);
  EXPECT_EQ(a.v.a, b.v.a);
}

TEST(PcaExplained, OneDimensionalPoints) {
  // points (0,0), (2,0), (4,0): sample variance of {0,2,4} is 4
  auto m = SparseMatrix::from_rows(
      2, {{}, {{0, 2.0}}, {{0, 4.0}}});
  auto pca = pca_explained(m, 2, 3);
  ASSERT_GE(pca.explained_variances.size(), 1u);
  EXPECT_NEAR(pca.explained_variances[0], 4.0, 1e-9);
  EXPECT_NEAR(pca.total_variance, 4.0, 1e-9);
  EXPECT_NEAR(pca.explained_variances[0] / pca.total_variance, 1.0, 1e-9);
}

TEST(PcaExplained, IsotropicMatchesOracle) {
  // A point set closed under 90-degree rotation has an exactly isotropic
  // covariance, so the two explained variances coincide.
  Rng rng(17);
  DenseMatrix d(64, 2);
  for (std::size_t g = 0; g < 16; ++g) {
    double x = rng.normal(), y = rng.normal();
    d(4 * g + 0, 0) = x;  d(4 * g + 0, 1) = y;
    d(4 * g + 1, 0) = -y; d(4 * g + 1, 1) = x;
    d(4 * g + 2, 0) = -x; d(4 * g + 2, 1) = -y;
    d(4 * g + 3, 0) = y;  d(4 * g + 3, 1) = -x;
  }
  auto pca = pca_explained(support::to_sparse(d), 2, 5);
  auto exact = oracle::dense_explained_variances(d);
  ASSERT_EQ(pca.explained_variances.size(), 2u);
  EXPECT_NEAR(pca.explained_variances[0], exact[0], 1e-3 * exact[0]);
  EXPECT_NEAR(pca.explained_variances[1], exact[1], 1e-3 * exact[0]);
  EXPECT_NEAR(pca.explained_variances[0] / pca.explained_variances[1], 1.0,
              1e-6);
}

TEST(PcaExplained, ConstantColumn) {
  auto m = SparseMatrix::from_rows(1, {{{0, 5.0}}, {{0, 5.0}}, {{0, 5.0}}});
  auto pca = pca_explained(m, 1, 1);
  EXPECT_DOUBLE_EQ(pca.total_variance, 0.0);
  EXPECT_TRUE(pca.explained_variances.empty());
}

TEST(PcaExplained, SingleRowRejected) {
  auto m = SparseMatrix::from_rows(1, {{{0, 1.0}}});
  EXPECT_THROW(pca_explained(m, 1, 1), ValidationError);
}

TEST(PcaExplained, VariancesSumToTotal) {
  auto dense = support::random_decaying_matrix(25, 18, 0.75, 77);
  auto pca = pca_explained(support::to_sparse(dense), 24, 13);
  double sum = 0;
  for (double l : pca.explained_variances) sum += l;
  EXPECT_NEAR(sum, pca.total_variance, 1e-6 * pca.total_variance);
}

TEST(SparseMatrix, FractionZero) {
  auto m = SparseMatrix::from_rows(4, {{{0, 1.0}}, {{1, 2.0}, {3, 1.0}}});
  EXPECT_DOUBLE_EQ(m.fraction_zero(), 1.0 - 3.0 / 8.0);
}

TEST(SparseMatrix, RejectsUnsortedColumns) {
  EXPECT_THROW(
      SparseMatrix::from_rows(3, {{{2, 1.0}, {1, 1.0}}}),
      ValidationError);
}

}  // namespace
