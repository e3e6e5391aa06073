// Low-level dense kernels: scalar reference implementations plus SIMD
// variants selected at runtime (AVX2+FMA on x86-64, NEON on aarch64).
//
// All matrices are row-major double arrays with an explicit leading
// dimension. The dispatch table is resolved once per process; the
// environment variable PPTDISCRIM_KERNELS=scalar|avx2|neon|auto forces a
// particular implementation (useful for equivalence testing).
#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace pptdiscrim::kern {

struct Kernels {
  const char* name;

  // sum_i a[i]*b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // x[i] *= alpha
  void (*scal)(double alpha, double* x, std::size_t n);
  // C (m x n, ldc) += alpha * A (m x k, lda) * B (k x n, ldb)
  void (*gemm_acc)(double* c, std::size_t ldc, const double* a,
                   std::size_t lda, const double* b, std::size_t ldb,
                   std::size_t m, std::size_t n, std::size_t k, double alpha);
};

// Reference implementation; always available.
const Kernels& scalar();

// Implementation chosen for this process (never null).
const Kernels& active();

// Every implementation usable on this machine, reference first.
std::vector<const Kernels*> available();

}  // namespace pptdiscrim::kern
