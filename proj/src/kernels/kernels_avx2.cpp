// AVX2+FMA kernels. Compiled with -mavx2 -mfma in its own translation
// unit; only reachable through the dispatch table after a cpuid check.
#include "pptdiscrim/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace pptdiscrim::kern {
namespace {

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  __m256d acc2 = _mm256_setzero_pd();
  __m256d acc3 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    acc2 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 8), _mm256_loadu_pd(b + i + 8), acc2);
    acc3 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 12), _mm256_loadu_pd(b + i + 12), acc3);
  }
  for (; i + 4 <= n; i += 4)
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  acc0 = _mm256_add_pd(_mm256_add_pd(acc0, acc1), _mm256_add_pd(acc2, acc3));
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc0);
  double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256d y0 = _mm256_loadu_pd(y + i);
    __m256d y1 = _mm256_loadu_pd(y + i + 4);
    y0 = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), y0);
    y1 = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i + 4), y1);
    _mm256_storeu_pd(y + i, y0);
    _mm256_storeu_pd(y + i + 4, y1);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scal_avx2(double alpha, double* x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  for (; i < n; ++i) x[i] *= alpha;
}

// 6x8 register block: 12 accumulators + 2 B lanes + 1 A broadcast.
template <int MR>
inline void micro_mx8(double* c, std::size_t ldc, const double* a,
                      std::size_t lda, const double* b, std::size_t ldb,
                      std::size_t k, double alpha) {
  __m256d acc[MR][2];
  for (int r = 0; r < MR; ++r) {
    acc[r][0] = _mm256_setzero_pd();
    acc[r][1] = _mm256_setzero_pd();
  }
  for (std::size_t p = 0; p < k; ++p) {
    const __m256d b0 = _mm256_loadu_pd(b + p * ldb);
    const __m256d b1 = _mm256_loadu_pd(b + p * ldb + 4);
    for (int r = 0; r < MR; ++r) {
      const __m256d ar = _mm256_set1_pd(a[r * lda + p]);
      acc[r][0] = _mm256_fmadd_pd(ar, b0, acc[r][0]);
      acc[r][1] = _mm256_fmadd_pd(ar, b1, acc[r][1]);
    }
  }
  const __m256d va = _mm256_set1_pd(alpha);
  for (int r = 0; r < MR; ++r) {
    double* cr = c + r * ldc;
    _mm256_storeu_pd(cr, _mm256_fmadd_pd(va, acc[r][0], _mm256_loadu_pd(cr)));
    _mm256_storeu_pd(cr + 4, _mm256_fmadd_pd(va, acc[r][1], _mm256_loadu_pd(cr + 4)));
  }
}

void gemm_block(double* c, std::size_t ldc, const double* a, std::size_t lda,
                const double* b, std::size_t ldb, std::size_t m, std::size_t n,
                std::size_t k, double alpha) {
  std::size_t j = 0;
  for (; j + 8 <= n; j += 8) {
    std::size_t i = 0;
    for (; i + 6 <= m; i += 6)
      micro_mx8<6>(c + i * ldc + j, ldc, a + i * lda, lda, b + j, ldb, k, alpha);
    for (; i + 2 <= m; i += 2)
      micro_mx8<2>(c + i * ldc + j, ldc, a + i * lda, lda, b + j, ldb, k, alpha);
    for (; i < m; ++i)
      micro_mx8<1>(c + i * ldc + j, ldc, a + i * lda, lda, b + j, ldb, k, alpha);
  }
  if (j < n) {  // ragged right edge, scalar
    for (std::size_t i = 0; i < m; ++i) {
      double* ci = c + i * ldc;
      const double* ai = a + i * lda;
      for (std::size_t p = 0; p < k; ++p) {
        const double aip = alpha * ai[p];
        const double* bp = b + p * ldb;
        for (std::size_t jj = j; jj < n; ++jj) ci[jj] += aip * bp[jj];
      }
    }
  }
}

void gemm_acc_avx2(double* c, std::size_t ldc, const double* a,
                   std::size_t lda, const double* b, std::size_t ldb,
                   std::size_t m, std::size_t n, std::size_t k, double alpha) {
  // K blocking keeps the streamed B panel inside L1/L2.
  constexpr std::size_t KC = 256;
  for (std::size_t p0 = 0; p0 < k; p0 += KC) {
    const std::size_t kc = (k - p0 < KC) ? (k - p0) : KC;
    gemm_block(c, ldc, a + p0, lda, b + p0 * ldb, ldb, m, n, kc, alpha);
  }
}

}  // namespace

const Kernels* kernels_avx2() {
  static const Kernels k{"avx2", dot_avx2, axpy_avx2, scal_avx2,
                         gemm_acc_avx2};
  return &k;
}

}  // namespace pptdiscrim::kern

#else

namespace pptdiscrim::kern {
const Kernels* kernels_avx2() { return nullptr; }
}  // namespace pptdiscrim::kern

#endif
