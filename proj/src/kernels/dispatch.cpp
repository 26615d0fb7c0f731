#include <cstdlib>
#include <cstring>

#include "qspectra/kernels.hpp"

namespace qspectra::kernels {

bool avx2_available() noexcept {
#if defined(QSPECTRA_HAVE_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

const Ops& select() noexcept {
  if (const char* env = std::getenv("QSPECTRA_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return scalar_ops();
    if (std::strcmp(env, "avx2") == 0 && avx2_available()) return avx2_ops();
  }
  return avx2_available() ? avx2_ops() : scalar_ops();
}

}  // namespace

const Ops& active() noexcept {
  static const Ops& chosen = select();
  return chosen;
}

}  // namespace qspectra::kernels
