// NEON kernels for aarch64. Baseline ISA there, so no cpuid gate is needed
// beyond the architecture check.
#include "pptdiscrim/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace pptdiscrim::kern {
namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
  }
  double s = vaddvq_f64(acc0) + vaddvq_f64(acc1);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
    vst1q_f64(y + i + 2, vfmaq_f64(vld1q_f64(y + i + 2), va, vld1q_f64(x + i + 2)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scal_neon(double alpha, double* x, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    vst1q_f64(x + i, vmulq_f64(va, vld1q_f64(x + i)));
  for (; i < n; ++i) x[i] *= alpha;
}

template <int MR>
inline void micro_mx4(double* c, std::size_t ldc, const double* a,
                      std::size_t lda, const double* b, std::size_t ldb,
                      std::size_t k, double alpha) {
  float64x2_t acc[MR][2];
  for (int r = 0; r < MR; ++r) {
    acc[r][0] = vdupq_n_f64(0.0);
    acc[r][1] = vdupq_n_f64(0.0);
  }
  for (std::size_t p = 0; p < k; ++p) {
    const float64x2_t b0 = vld1q_f64(b + p * ldb);
    const float64x2_t b1 = vld1q_f64(b + p * ldb + 2);
    for (int r = 0; r < MR; ++r) {
      const float64x2_t ar = vdupq_n_f64(a[r * lda + p]);
      acc[r][0] = vfmaq_f64(acc[r][0], ar, b0);
      acc[r][1] = vfmaq_f64(acc[r][1], ar, b1);
    }
  }
  const float64x2_t va = vdupq_n_f64(alpha);
  for (int r = 0; r < MR; ++r) {
    double* cr = c + r * ldc;
    vst1q_f64(cr, vfmaq_f64(vld1q_f64(cr), va, acc[r][0]));
    vst1q_f64(cr + 2, vfmaq_f64(vld1q_f64(cr + 2), va, acc[r][1]));
  }
}

void gemm_acc_neon(double* c, std::size_t ldc, const double* a,
                   std::size_t lda, const double* b, std::size_t ldb,
                   std::size_t m, std::size_t n, std::size_t k, double alpha) {
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4)
      micro_mx4<4>(c + i * ldc + j, ldc, a + i * lda, lda, b + j, ldb, k, alpha);
    for (; i < m; ++i)
      micro_mx4<1>(c + i * ldc + j, ldc, a + i * lda, lda, b + j, ldb, k, alpha);
  }
  if (j < n) {
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

}  // namespace

const Kernels* kernels_neon() {
  static const Kernels k{"neon", dot_neon, axpy_neon, scal_neon,
                         gemm_acc_neon};
  return &k;
}

}  // namespace pptdiscrim::kern

#else

namespace pptdiscrim::kern {
const Kernels* kernels_neon() { return nullptr; }
}  // namespace pptdiscrim::kern

#endif
