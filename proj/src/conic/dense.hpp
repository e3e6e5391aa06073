// Internal dense real helpers for the interior-point core. Row-major
// storage throughout; heavy loops route through the kernel dispatch.
#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "pptdiscrim/kernels.hpp"

namespace pptdiscrim::conic::detail {

struct Mat {
  int rows = 0, cols = 0;
  std::vector<double> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}

  double* row(int i) { return a.data() + static_cast<std::size_t>(i) * cols; }
  const double* row(int i) const { return a.data() + static_cast<std::size_t>(i) * cols; }
  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  void zero() { std::fill(a.begin(), a.end(), 0.0); }
};

inline Mat transpose(const Mat& m) {
  Mat t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

// C += alpha * A * B
inline void gemm_acc(Mat& c, const Mat& a, const Mat& b, double alpha) {
  kern::active().gemm_acc(c.a.data(), c.cols, a.a.data(), a.cols, b.a.data(),
                          b.cols, a.rows, b.cols, a.cols, alpha);
}

// In-place lower Cholesky of the symmetric matrix m (upper part ignored,
// overwritten). Adds `reg` to the diagonal first. Returns false if a
// pivot is not positive.
inline bool cholesky(Mat& m, double reg) {
  const auto& K = kern::active();
  const int n = m.rows;
  for (int i = 0; i < n; ++i) m.at(i, i) += reg;
  for (int i = 0; i < n; ++i) {
    double* li = m.row(i);
    for (int j = 0; j < i; ++j) {
      const double* lj = m.row(j);
      li[j] = (li[j] - K.dot(li, lj, j)) / lj[j];
    }
    const double d = li[i] - K.dot(li, li, i);
    if (!(d > 0.0)) return false;
    li[i] = std::sqrt(d);
    for (int j = i + 1; j < n; ++j) m.at(i, j) = 0.0;
  }
  return true;
}

// Rank-revealing variant: pivots with d <= tol * scale are skipped (the
// column is zeroed and the index recorded). Used for the dependent-row
// check on the constraint Gram matrix.
inline void cholesky_skipping(Mat& m, double tol, double scale,
                              std::vector<int>& skipped) {
  const auto& K = kern::active();
  const int n = m.rows;
  for (int i = 0; i < n; ++i) {
    double* li = m.row(i);
    for (int j = 0; j < i; ++j) {
      const double* lj = m.row(j);
      li[j] = (lj[j] == 0.0) ? 0.0 : (li[j] - K.dot(li, lj, j)) / lj[j];
    }
    const double d = li[i] - K.dot(li, li, i);
    if (d <= tol * scale) {
      for (int j = 0; j <= i; ++j) li[j] = 0.0;
      skipped.push_back(i);
    } else {
      li[i] = std::sqrt(d);
    }
    for (int j = i + 1; j < n; ++j) m.at(i, j) = 0.0;
  }
}

// Solve L * X = B in place, X and B row-major (rows of B indexed like L).
// Blocked forward substitution: panel updates go through gemm.
inline void trsm_lower_left(const Mat& l, Mat& b) {
  const auto& K = kern::active();
  const int n = l.rows;
  const int nrhs = b.cols;
  constexpr int PB = 48;
  for (int i0 = 0; i0 < n; i0 += PB) {
    const int ib = std::min(PB, n - i0);
    if (i0 > 0) {
      // B[i0:i0+ib] -= L[i0:i0+ib, 0:i0] * B[0:i0]
      K.gemm_acc(b.row(i0), b.cols, l.row(i0), l.cols, b.row(0), b.cols,
                 ib, nrhs, i0, -1.0);
    }
    for (int i = i0; i < i0 + ib; ++i) {
      double* bi = b.row(i);
      for (int j = i0; j < i; ++j) K.axpy(-l.at(i, j), b.row(j), bi, nrhs);
      K.scal(1.0 / l.at(i, i), bi, nrhs);
    }
  }
}

// Forward substitution for a single vector: L y = x, in place.
inline void trsv_lower(const Mat& l, double* x) {
  const auto& K = kern::active();
  for (int i = 0; i < l.rows; ++i)
    x[i] = (x[i] - K.dot(l.row(i), x, i)) / l.at(i, i);
}

// Back substitution: L^T y = x, in place.
inline void trsv_lower_t(const Mat& l, double* x) {
  for (int i = l.rows - 1; i >= 0; --i) {
    x[i] /= l.at(i, i);
    const double xi = x[i];
    const double* li = l.row(i);
    for (int j = 0; j < i; ++j) x[j] -= li[j] * xi;
  }
}

// C -= A^T * A restricted to the lower triangle (tile-blocked); the
// strict upper triangle of C is left untouched.
inline void syrk_nt_lower_sub(Mat& c, const Mat& at, const Mat& a) {
  // at = A^T (n x k), a = A (k x n); C is n x n
  const auto& K = kern::active();
  const int n = c.rows;
  const int k = a.rows;
  constexpr int TB = 64;
  for (int i0 = 0; i0 < n; i0 += TB) {
    const int ib = std::min(TB, n - i0);
    for (int j0 = 0; j0 <= i0; j0 += TB) {
      const int jb = std::min(TB, n - j0);
      K.gemm_acc(c.row(i0) + j0, c.cols, at.row(i0), at.cols,
                 a.a.data() + j0, a.cols, ib, jb, k, -1.0);
    }
  }
}

inline void mirror_lower(Mat& m) {
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < i; ++j) m.at(j, i) = m.at(i, j);
}

}  // namespace pptdiscrim::conic::detail
