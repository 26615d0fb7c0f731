#pragma once

#include <cstddef>

namespace qspectra::kernels {

// Batched quaternion arithmetic over packed (w,x,y,z) doubles, four per
// element. These are the inner loops of every matrix operation; the scalar
// implementation is the reference semantics and the SIMD variants must agree
// with it bit for bit (same multiply/add tree, no FMA contraction).
//
// hamilton_batch: out[i] = a[i] * b[i], i < count. out may alias a or b.
// qgemm:          c = a * b for n x n quaternion matrices, row-major.
//                 c must not alias a or b.
// qgemv:          out = a * v for an n x n matrix and an n-vector.
//                 out must not alias a or v.
using HamiltonBatchFn = void (*)(const double* a, const double* b, double* out,
                                 std::size_t count);
using QGemmFn = void (*)(std::size_t n, const double* a, const double* b,
                         double* c);
using QGemvFn = void (*)(std::size_t n, const double* a, const double* v,
                         double* out);

struct Ops {
  const char* name;
  HamiltonBatchFn hamilton_batch;
  QGemmFn qgemm;
  QGemvFn qgemv;
};

const Ops& scalar_ops() noexcept;

// True when the AVX2 variant was compiled in and the CPU supports it.
bool avx2_available() noexcept;
const Ops& avx2_ops() noexcept;

// Runtime-selected implementation. Honors QSPECTRA_KERNELS=scalar|avx2 from
// the environment (read once, on first use), otherwise picks the widest
// supported variant.
const Ops& active() noexcept;

}  // namespace qspectra::kernels
