#pragma once

// Brute-force reference implementations used only by tests. The SVD oracle
// is one-sided Jacobi (Hestenes), a different algorithm from the randomized
// subspace iteration it checks.

#include <algorithm>
#include <cmath>
#include <vector>

#include "autotext/numerics.hpp"

namespace oracle {

// All singular values of a dense matrix, descending, by one-sided Jacobi:
// rotate column pairs until mutual orthogonality, singular values are the
// resulting column norms.
inline std::vector<double> dense_singular_values(autotext::DenseMatrix a) {
  const std::size_t rows = a.rows, cols = a.cols;
  bool transposed = false;
  if (rows < cols) {
    autotext::DenseMatrix t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) t(j, i) = a(i, j);
    }
    a = std::move(t);
    transposed = true;
  }
  const std::size_t m = a.rows, n = a.cols;
  (void)transposed;

  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double apq = 0, app = 0, aqq = 0;
        for (std::size_t i = 0; i < m; ++i) {
          apq += a(i, p) * a(i, q);
          app += a(i, p) * a(i, p);
          aqq += a(i, q) * a(i, q);
        }
        off = std::max(off, std::abs(apq) / (std::sqrt(app * aqq) + 1e-300));
        if (std::abs(apq) < 1e-15 * std::sqrt(app * aqq) + 1e-300) continue;
        double tau = (aqq - app) / (2.0 * apq);
        double t = (tau >= 0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = c * t;
        for (std::size_t i = 0; i < m; ++i) {
          double aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - s * aiq;
          a(i, q) = s * aip + c * aiq;
        }
      }
    }
    if (off < 1e-14) break;
  }
  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) {
    double norm = 0;
    for (std::size_t i = 0; i < m; ++i) norm += a(i, j) * a(i, j);
    sigma[j] = std::sqrt(norm);
  }
  std::sort(sigma.begin(), sigma.end(), std::greater<double>());
  return sigma;
}

// PCA explained variances of a dense matrix: explicit column centering, then
// the Jacobi SVD above.
inline std::vector<double> dense_explained_variances(autotext::DenseMatrix a) {
  const std::size_t rows = a.rows, cols = a.cols;
  for (std::size_t j = 0; j < cols; ++j) {
    double mean = 0;
    for (std::size_t i = 0; i < rows; ++i) mean += a(i, j);
    mean /= static_cast<double>(rows);
    for (std::size_t i = 0; i < rows; ++i) a(i, j) -= mean;
  }
  auto sigma = dense_singular_values(std::move(a));
  std::vector<double> lambda;
  for (double s : sigma) {
    lambda.push_back(s * s / static_cast<double>(rows - 1));
  }
  return lambda;
}

}  // namespace oracle
