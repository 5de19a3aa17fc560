#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <numeric>
#include <vector>

#include "autotext/common.hpp"

namespace autotext {

// ---------------------------------------------------------------- dense

struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> a;  // row-major

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}

  double& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return a[i * cols + j];
  }
};

// ---------------------------------------------------------------- sparse CSR

class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols)
      : n_rows_(rows), n_cols_(cols), row_offsets_(rows + 1, 0) {}

  // Rows must be appended in order; columns within a row strictly increasing.
  // Zero values are dropped.
  static SparseMatrix from_rows(
      std::size_t n_cols,
      const std::vector<std::vector<std::pair<std::size_t, double>>>& rows) {
    SparseMatrix m(rows.size(), n_cols);
    m.row_offsets_.assign(1, 0);
    for (const auto& row : rows) {
      std::size_t prev = std::numeric_limits<std::size_t>::max();
      for (const auto& [col, val] : row) {
        if (prev != std::numeric_limits<std::size_t>::max() && col <= prev) {
          throw ValidationError("sparse row columns must strictly increase");
        }
        if (col >= n_cols) throw ValidationError("sparse column out of range");
        prev = col;
        if (val != 0.0) {
          m.col_indices_.push_back(col);
          m.values_.push_back(val);
        }
      }
      m.row_offsets_.push_back(m.col_indices_.size());
    }
    return m;
  }

  std::size_t rows() const { return n_rows_; }
  std::size_t cols() const { return n_cols_; }
  std::size_t nnz() const { return values_.size(); }

  template <class Fn>  // fn(col, value)
  void for_each_in_row(std::size_t i, Fn fn) const {
    for (std::size_t k = row_offsets_[i]; k < row_offsets_[i + 1]; ++k) {
      fn(col_indices_[k], values_[k]);
    }
  }

  double fraction_zero() const {
    if (n_rows_ == 0 || n_cols_ == 0) return 1.0;
    double total = static_cast<double>(n_rows_) * static_cast<double>(n_cols_);
    return 1.0 - static_cast<double>(nnz()) / total;
  }

  std::vector<double> column_means() const {
    std::vector<double> mu(n_cols_, 0.0);
    for (std::size_t i = 0; i < n_rows_; ++i) {
      for_each_in_row(i, [&](std::size_t j, double v) { mu[j] += v; });
    }
    for (double& m : mu) m /= static_cast<double>(n_rows_);
    return mu;
  }

  std::vector<double> column_sum_squares() const {
    std::vector<double> ssq(n_cols_, 0.0);
    for (std::size_t i = 0; i < n_rows_; ++i) {
      for_each_in_row(i, [&](std::size_t j, double v) { ssq[j] += v * v; });
    }
    return ssq;
  }

  DenseMatrix to_dense() const {
    DenseMatrix d(n_rows_, n_cols_);
    for (std::size_t i = 0; i < n_rows_; ++i) {
      for_each_in_row(i, [&](std::size_t j, double v) { d(i, j) = v; });
    }
    return d;
  }

 private:
  std::size_t n_rows_ = 0;
  std::size_t n_cols_ = 0;
  std::vector<std::size_t> row_offsets_{0};
  std::vector<std::size_t> col_indices_;
  std::vector<double> values_;
};

// ---------------------------------------------------------------- stats block

struct StatsBlock {
  double min = 0, max = 0, mean = 0, std_dev = 0;
  double skewness = 0, kurtosis = 0, mean_std_ratio = 0, entropy = 0;
};

// Population moments; degenerate cases (zero variance, all-zero mass) yield
// zeros rather than NaN. Entropy is Shannon entropy in bits of the values
// normalized to a probability vector, negatives clamped to zero first.
inline StatsBlock stats_block(const std::vector<double>& values) {
  if (values.empty()) throw ValidationError("stats_block: empty input");
  StatsBlock s;
  const double n = static_cast<double>(values.size());
  s.min = *std::min_element(values.begin(), values.end());
  s.max = *std::max_element(values.begin(), values.end());
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double m2 = 0, m3 = 0, m4 = 0;
  for (double v : values) {
    double d = v - s.mean;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;
  s.std_dev = std::sqrt(m2);
  if (s.std_dev > 0) {
    s.skewness = m3 / (s.std_dev * s.std_dev * s.std_dev);
    s.kurtosis = m4 / (m2 * m2) - 3.0;
    s.mean_std_ratio = s.mean / s.std_dev;
  }
  double mass = 0;
  for (double v : values) mass += std::max(v, 0.0);
  if (mass > 0) {
    for (double v : values) {
      double p = std::max(v, 0.0) / mass;
      if (p > 0) s.entropy -= p * std::log2(p);
    }
    s.entropy = std::max(s.entropy, 0.0);
  }
  return s;
}

// ---------------------------------------------------------------- operators

// Block mat-mul interface so the randomized SVD can run on a plain sparse
// matrix or on an implicitly centered one without densifying.
struct LinearOperator {
  std::size_t rows = 0;
  std::size_t cols = 0;
  // out = A * in, in: cols x b
  std::function<void(const DenseMatrix&, DenseMatrix&)> apply;
  // out = A^T * in, in: rows x b
  std::function<void(const DenseMatrix&, DenseMatrix&)> apply_transpose;
};

inline LinearOperator make_operator(const SparseMatrix& m) {
  LinearOperator op;
  op.rows = m.rows();
  op.cols = m.cols();
  op.apply = [&m](const DenseMatrix& in, DenseMatrix& out) {
    out = DenseMatrix(m.rows(), in.cols);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      m.for_each_in_row(i, [&](std::size_t j, double v) {
        for (std::size_t b = 0; b < in.cols; ++b) out(i, b) += v * in(j, b);
      });
    }
  };
  op.apply_transpose = [&m](const DenseMatrix& in, DenseMatrix& out) {
    out = DenseMatrix(m.cols(), in.cols);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      m.for_each_in_row(i, [&](std::size_t j, double v) {
        for (std::size_t b = 0; b < in.cols; ++b) out(j, b) += v * in(i, b);
      });
    }
  };
  return op;
}

// Operator for (A - 1 mu^T): column-centered A without densifying.
inline LinearOperator make_centered_operator(const SparseMatrix& m,
                                             std::vector<double> means) {
  LinearOperator base = make_operator(m);
  LinearOperator op;
  op.rows = m.rows();
  op.cols = m.cols();
  auto mu = std::make_shared<std::vector<double>>(std::move(means));
  op.apply = [base, mu](const DenseMatrix& in, DenseMatrix& out) {
    base.apply(in, out);
    std::vector<double> mu_in(in.cols, 0.0);
    for (std::size_t j = 0; j < in.rows; ++j) {
      for (std::size_t b = 0; b < in.cols; ++b) {
        mu_in[b] += (*mu)[j] * in(j, b);
      }
    }
    for (std::size_t i = 0; i < out.rows; ++i) {
      for (std::size_t b = 0; b < out.cols; ++b) out(i, b) -= mu_in[b];
    }
  };
  op.apply_transpose = [base, mu](const DenseMatrix& in, DenseMatrix& out) {
    base.apply_transpose(in, out);
    std::vector<double> col_sums(in.cols, 0.0);
    for (std::size_t i = 0; i < in.rows; ++i) {
      for (std::size_t b = 0; b < in.cols; ++b) col_sums[b] += in(i, b);
    }
    for (std::size_t j = 0; j < out.rows; ++j) {
      for (std::size_t b = 0; b < out.cols; ++b) {
        out(j, b) -= (*mu)[j] * col_sums[b];
      }
    }
  };
  return op;
}

// ---------------------------------------------------------------- helpers

namespace detail {

// Modified Gram-Schmidt, two passes. Columns with vanishing norm are zeroed.
inline void orthonormalize_columns(DenseMatrix& q) {
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t j = 0; j < q.cols; ++j) {
      for (std::size_t p = 0; p < j; ++p) {
        double dot = 0;
        for (std::size_t i = 0; i < q.rows; ++i) dot += q(i, p) * q(i, j);
        for (std::size_t i = 0; i < q.rows; ++i) q(i, j) -= dot * q(i, p);
      }
      double norm = 0;
      for (std::size_t i = 0; i < q.rows; ++i) norm += q(i, j) * q(i, j);
      norm = std::sqrt(norm);
      if (norm > 1e-150) {
        for (std::size_t i = 0; i < q.rows; ++i) q(i, j) /= norm;
      } else {
        for (std::size_t i = 0; i < q.rows; ++i) q(i, j) = 0.0;
      }
    }
  }
}

// Cyclic Jacobi eigendecomposition of a symmetric matrix. Eigenvalues
// descend; eigenvectors are the columns of `vecs`.
inline void jacobi_eigen_symmetric(DenseMatrix s, std::vector<double>& vals,
                                   DenseMatrix& vecs) {
  const std::size_t n = s.rows;
  vecs = DenseMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) vecs(i, i) = 1.0;
  double frob = 0;
  for (double v : s.a) frob += v * v;
  frob = std::sqrt(frob);
  const double tol = frob * 1e-14 + 1e-300;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += s(p, q) * s(p, q);
    }
    if (std::sqrt(2 * off) < tol) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(s(p, q)) < tol / (10.0 * static_cast<double>(n))) continue;
        double theta = (s(q, q) - s(p, p)) / (2.0 * s(p, q));
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double sn = t * c;
        for (std::size_t i = 0; i < n; ++i) {
          double sip = s(i, p), siq = s(i, q);
          s(i, p) = c * sip - sn * siq;
          s(i, q) = sn * sip + c * siq;
        }
        for (std::size_t j = 0; j < n; ++j) {
          double spj = s(p, j), sqj = s(q, j);
          s(p, j) = c * spj - sn * sqj;
          s(q, j) = sn * spj + c * sqj;
        }
        for (std::size_t i = 0; i < n; ++i) {
          double vip = vecs(i, p), viq = vecs(i, q);
          vecs(i, p) = c * vip - sn * viq;
          vecs(i, q) = sn * vip + c * viq;
        }
      }
    }
  }
  vals.resize(n);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) {
    vals[i] = s(i, i);
    order[i] = i;
  }
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
  std::vector<double> sorted_vals(n);
  DenseMatrix sorted_vecs(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    sorted_vals[k] = vals[order[k]];
    for (std::size_t i = 0; i < n; ++i) sorted_vecs(i, k) = vecs(i, order[k]);
  }
  vals = std::move(sorted_vals);
  vecs = std::move(sorted_vecs);
}

}  // namespace detail

// ---------------------------------------------------------------- SVD

struct SvdResult {
  std::vector<double> singular_values;  // descending, length k
  DenseMatrix u;                        // rows x k
  DenseMatrix v;                        // cols x k (zero columns where sigma=0)
};

inline constexpr std::size_t kSvdOversampling = 10;
inline constexpr int kSvdPowerIterations = 7;

// Randomized subspace iteration for the top-k singular triplets.
inline SvdResult truncated_svd(const LinearOperator& op, std::size_t k,
                               std::uint64_t seed) {
  if (k < 1 || k > std::min(op.rows, op.cols)) {
    throw ValidationError("truncated_svd: k out of range");
  }
  const std::size_t l = std::min(k + kSvdOversampling, std::min(op.rows, op.cols));

  Rng rng(seed);
  DenseMatrix omega(op.cols, l);
  for (double& x : omega.a) x = rng.normal();

  DenseMatrix q;
  op.apply(omega, q);
  detail::orthonormalize_columns(q);
  for (int it = 0; it < kSvdPowerIterations; ++it) {
    DenseMatrix w;
    op.apply_transpose(q, w);
    detail::orthonormalize_columns(w);
    op.apply(w, q);
    detail::orthonormalize_columns(q);
  }

  // B = Q^T A  (l x cols), realized as B^T = A^T Q.
  DenseMatrix bt;
  op.apply_transpose(q, bt);  // cols x l

  // Eigendecompose B B^T = (B^T)^T (B^T): l x l.
  DenseMatrix gram(l, l);
  for (std::size_t p = 0; p < l; ++p) {
    for (std::size_t r = p; r < l; ++r) {
      double dot = 0;
      for (std::size_t j = 0; j < bt.rows; ++j) dot += bt(j, p) * bt(j, r);
      gram(p, r) = dot;
      gram(r, p) = dot;
    }
  }
  std::vector<double> eigvals;
  DenseMatrix eigvecs;
  detail::jacobi_eigen_symmetric(std::move(gram), eigvals, eigvecs);

  SvdResult out;
  out.singular_values.resize(k);
  out.u = DenseMatrix(op.rows, k);
  out.v = DenseMatrix(op.cols, k);
  // Below numerical rank a direction is pure rounding noise; its factors
  // stay zero so rank-deficient inputs transform to exact zeros.
  const double sigma_floor =
      std::sqrt(std::max(eigvals.front(), 0.0)) * 1e-10 + 1e-300;
  for (std::size_t c = 0; c < k; ++c) {
    double lambda = std::max(eigvals[c], 0.0);
    double sigma = std::sqrt(lambda);
    if (sigma <= sigma_floor) {
      out.singular_values[c] = 0.0;
      continue;
    }
    out.singular_values[c] = sigma;
    for (std::size_t i = 0; i < op.rows; ++i) {
      double acc = 0;
      for (std::size_t p = 0; p < l; ++p) acc += q(i, p) * eigvecs(p, c);
      out.u(i, c) = acc;
    }
    for (std::size_t j = 0; j < op.cols; ++j) {
      double acc = 0;
      for (std::size_t p = 0; p < l; ++p) acc += bt(j, p) * eigvecs(p, c);
      out.v(j, c) = acc / sigma;
    }
  }
  return out;
}

inline SvdResult truncated_svd(const SparseMatrix& m, std::size_t k,
                               std::uint64_t seed) {
  return truncated_svd(make_operator(m), k, seed);
}

// ---------------------------------------------------------------- PCA

struct PcaResult {
  std::vector<double> explained_variances;  // descending, length <= k
  std::vector<double> singular_values;      // of the centered matrix
  double total_variance = 0;                // sum of per-column variances
};

// PCA of the implicitly column-centered matrix. Explained variance of
// component i is sigma_i^2 / (n_rows - 1); total variance sums the sample
// variances of all columns.
inline PcaResult pca_explained(const SparseMatrix& m, std::size_t k,
                               std::uint64_t seed) {
  if (m.rows() < 2) throw ValidationError("pca_explained: need >= 2 rows");
  PcaResult out;
  const double n = static_cast<double>(m.rows());
  auto means = m.column_means();
  auto ssq = m.column_sum_squares();
  for (std::size_t j = 0; j < m.cols(); ++j) {
    double var = (ssq[j] - n * means[j] * means[j]) / (n - 1.0);
    out.total_variance += std::max(var, 0.0);
  }
  std::size_t k_eff = std::min({k, m.rows() - 1, m.cols()});
  if (k_eff == 0 || out.total_variance <= 0.0) return out;
  auto svd = truncated_svd(make_centered_operator(m, means), k_eff, seed);
  out.singular_values = svd.singular_values;
  out.explained_variances.resize(k_eff);
  for (std::size_t i = 0; i < k_eff; ++i) {
    double s = svd.singular_values[i];
    out.explained_variances[i] = s * s / (n - 1.0);
  }
  return out;
}

}  // namespace autotext
