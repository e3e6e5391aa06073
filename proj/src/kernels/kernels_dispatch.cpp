#include "pptdiscrim/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace pptdiscrim::kern {

const Kernels* kernels_avx2();
const Kernels* kernels_neon();

namespace {

bool cpu_has_avx2_fma() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Kernels* pick() {
  const char* want = std::getenv("PPTDISCRIM_KERNELS");
  if (want != nullptr && std::strcmp(want, "auto") != 0) {
    if (std::strcmp(want, "scalar") == 0) return &scalar();
    if (std::strcmp(want, "avx2") == 0 && cpu_has_avx2_fma()) {
      if (const Kernels* k = kernels_avx2()) return k;
    }
    if (std::strcmp(want, "neon") == 0) {
      if (const Kernels* k = kernels_neon()) return k;
    }
    return &scalar();  // unknown or unavailable: fall back
  }
  if (cpu_has_avx2_fma()) {
    if (const Kernels* k = kernels_avx2()) return k;
  }
  if (const Kernels* k = kernels_neon()) return k;
  return &scalar();
}

}  // namespace

const Kernels& active() {
  static const Kernels* k = pick();
  return *k;
}

std::vector<const Kernels*> available() {
  std::vector<const Kernels*> out{&scalar()};
  if (cpu_has_avx2_fma()) {
    if (const Kernels* k = kernels_avx2()) out.push_back(k);
  }
  if (const Kernels* k = kernels_neon()) out.push_back(k);
  return out;
}

}  // namespace pptdiscrim::kern
