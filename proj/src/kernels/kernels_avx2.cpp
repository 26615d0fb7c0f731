#include "qspectra/kernels.hpp"

#if defined(QSPECTRA_HAVE_AVX2)

#include <immintrin.h>

#include <cstddef>

namespace qspectra::kernels {
namespace {

// One quaternion occupies a full __m256d lane group: (w, x, y, z).
// Group permutation controls for the Hamilton product, lane k <- b[idx].
//   t1: (bx, bw, bz, by) signs (-, +, -, +)
//   t2: (by, bz, bw, bx) signs (-, +, +, -)
//   t3: (bz, by, bx, bw) signs (-, -, +, +)
inline __m256d sign_mask(double s0, double s1, double s2, double s3) {
  return _mm256_setr_pd(s0, s1, s2, s3);
}

inline __m256d hamilton1(__m256d a, __m256d b) {
  const __m256d aw = _mm256_permute4x64_pd(a, 0x00);
  const __m256d ax = _mm256_permute4x64_pd(a, 0x55);
  const __m256d ay = _mm256_permute4x64_pd(a, 0xAA);
  const __m256d az = _mm256_permute4x64_pd(a, 0xFF);

  const __m256d b1 = _mm256_permute4x64_pd(b, 0xB1);  // (1,0,3,2)
  const __m256d b2 = _mm256_permute4x64_pd(b, 0x4E);  // (2,3,0,1)
  const __m256d b3 = _mm256_permute4x64_pd(b, 0x1B);  // (3,2,1,0)

  const __m256d m1 = sign_mask(-0.0, 0.0, -0.0, 0.0);
  const __m256d m2 = sign_mask(-0.0, 0.0, 0.0, -0.0);
  const __m256d m3 = sign_mask(-0.0, -0.0, 0.0, 0.0);

  const __m256d t0 = _mm256_mul_pd(aw, b);
  const __m256d t1 = _mm256_xor_pd(_mm256_mul_pd(ax, b1), m1);
  const __m256d t2 = _mm256_xor_pd(_mm256_mul_pd(ay, b2), m2);
  const __m256d t3 = _mm256_xor_pd(_mm256_mul_pd(az, b3), m3);

  return _mm256_add_pd(_mm256_add_pd(t0, t1), _mm256_add_pd(t2, t3));
}

void hamilton_batch_avx2(const double* a, const double* b, double* out,
                         std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    const __m256d va = _mm256_loadu_pd(a + 4 * i);
    const __m256d vb = _mm256_loadu_pd(b + 4 * i);
    _mm256_storeu_pd(out + 4 * i, hamilton1(va, vb));
  }
}

void qgemm_avx2(std::size_t n, const double* a, const double* b, double* c) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      __m256d acc = _mm256_setzero_pd();
      for (std::size_t k = 0; k < n; ++k) {
        const __m256d va = _mm256_loadu_pd(a + 4 * (i * n + k));
        const __m256d vb = _mm256_loadu_pd(b + 4 * (k * n + j));
        acc = _mm256_add_pd(acc, hamilton1(va, vb));
      }
      _mm256_storeu_pd(c + 4 * (i * n + j), acc);
    }
  }
}

void qgemv_avx2(std::size_t n, const double* a, const double* v, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t k = 0; k < n; ++k) {
      const __m256d va = _mm256_loadu_pd(a + 4 * (i * n + k));
      const __m256d vv = _mm256_loadu_pd(v + 4 * k);
      acc = _mm256_add_pd(acc, hamilton1(va, vv));
    }
    _mm256_storeu_pd(out + 4 * i, acc);
  }
}

}  // namespace

const Ops& avx2_ops() noexcept {
  static const Ops ops{"avx2", hamilton_batch_avx2, qgemm_avx2, qgemv_avx2};
  return ops;
}

}  // namespace qspectra::kernels

#else

namespace qspectra::kernels {

const Ops& avx2_ops() noexcept { return scalar_ops(); }

}  // namespace qspectra::kernels

#endif
