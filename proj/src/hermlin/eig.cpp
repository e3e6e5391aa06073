// Householder tridiagonalization (tred2) + implicit-shift QL (tql2).
#include "pptdiscrim/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pptdiscrim/kernels.hpp"

namespace pptdiscrim {

namespace {

// Reduces the symmetric matrix held in z (row-major n x n) to tridiagonal
// form; on exit d holds the diagonal, e the subdiagonal (e[0] unused).
// With accumulate, z is overwritten by the orthogonal transformation.
void tridiagonalize(std::vector<double>& z, int n, std::vector<double>& d,
                    std::vector<double>& e, bool accumulate) {
  const auto& K = kern::active();
  auto at = [&](int i, int j) -> double& { return z[static_cast<std::size_t>(i) * n + j]; };

  for (int i = n - 1; i >= 1; --i) {
    const int l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (int k = 0; k <= l; ++k) scale += std::abs(at(i, k));
      if (scale == 0.0) {
        e[i] = at(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          at(i, k) /= scale;
          h += at(i, k) * at(i, k);
        }
        double f = at(i, l);
        double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        at(i, l) = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          if (accumulate) at(j, i) = at(i, j) / h;
          // g = (A v)_j over the lower triangle
          double gg = K.dot(&z[static_cast<std::size_t>(j) * n], &z[static_cast<std::size_t>(i) * n],
                            static_cast<std::size_t>(j) + 1);
          for (int k = j + 1; k <= l; ++k) gg += at(k, j) * at(i, k);
          e[j] = gg / h;
          f += e[j] * at(i, j);
        }
        const double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = at(i, j);
          const double gj = e[j] - hh * f;
          e[j] = gj;
          // rank-2 update of row j (lower triangle)
          K.axpy(-f, e.data(), &z[static_cast<std::size_t>(j) * n], static_cast<std::size_t>(j) + 1);
          K.axpy(-gj, &z[static_cast<std::size_t>(i) * n], &z[static_cast<std::size_t>(j) * n],
                 static_cast<std::size_t>(j) + 1);
        }
      }
    } else {
      e[i] = at(i, l);
    }
    d[i] = h;
  }
  if (accumulate) d[0] = 0.0;
  e[0] = 0.0;

  for (int i = 0; i < n; ++i) {
    if (accumulate) {
      const int l = i - 1;
      if (d[i] != 0.0) {
        for (int j = 0; j <= l; ++j) {
          double g = 0.0;
          for (int k = 0; k <= l; ++k) g += at(i, k) * at(k, j);
          for (int k = 0; k <= l; ++k) at(k, j) -= g * at(k, i);
        }
      }
      d[i] = at(i, i);
      at(i, i) = 1.0;
      for (int j = 0; j <= l; ++j) {
        at(j, i) = 0.0;
        at(i, j) = 0.0;
      }
    } else {
      d[i] = at(i, i);
    }
  }
}

// Implicit-shift QL on the tridiagonal (d, e); z accumulates rotations
// when accumulate is set. Throws after the per-eigenvalue sweep cap.
void ql_implicit(std::vector<double>& d, std::vector<double>& e,
                 std::vector<double>& z, int n, bool accumulate) {
  constexpr int kMaxSweeps = 50;
  const double eps = std::numeric_limits<double>::epsilon();
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == kMaxSweeps)
          throw EigNonConvergence("sym_eig: QL sweep cap exceeded");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (accumulate) {
            for (int k = 0; k < n; ++k) {
              const std::size_t ki = static_cast<std::size_t>(k) * n + i;
              f = z[ki + 1];
              z[ki + 1] = s * z[ki] + c * f;
              z[ki] = c * z[ki] - s * f;
            }
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

void sort_ascending(std::vector<double>& d, std::vector<double>& z, int n,
                    bool with_vectors) {
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });
  std::vector<double> ds(n);
  for (int j = 0; j < n; ++j) ds[j] = d[idx[j]];
  d = std::move(ds);
  if (with_vectors) {
    std::vector<double> zs(z.size());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        zs[static_cast<std::size_t>(i) * n + j] = z[static_cast<std::size_t>(i) * n + idx[j]];
    z = std::move(zs);
  }
}

std::vector<double> pack(const double* a, int n, int lda) {
  std::vector<double> z(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      z[static_cast<std::size_t>(i) * n + j] = a[static_cast<std::size_t>(i) * lda + j];
  return z;
}

}  // namespace

std::vector<double> sym_eigvals(const double* a, int n, int lda) {
  if (n == 1) return {a[0]};
  std::vector<double> z = pack(a, n, lda);
  std::vector<double> d(n), e(n);
  tridiagonalize(z, n, d, e, false);
  ql_implicit(d, e, z, n, false);
  sort_ascending(d, z, n, false);
  return d;
}

SymEig sym_eig(const double* a, int n, int lda) {
  SymEig out;
  if (n == 1) {
    out.values = {a[0]};
    out.vectors = {1.0};
    return out;
  }
  std::vector<double> z = pack(a, n, lda);
  std::vector<double> d(n), e(n);
  tridiagonalize(z, n, d, e, true);
  ql_implicit(d, e, z, n, true);
  sort_ascending(d, z, n, true);
  out.values = std::move(d);
  out.vectors = std::move(z);
  return out;
}

}  // namespace pptdiscrim
