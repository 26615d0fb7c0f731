#include <cstddef>

#include "qspectra/kernels.hpp"

namespace qspectra::kernels {
namespace {

// Reference Hamilton product, written as four sign-permuted groups summed in
// a fixed tree: (t0 + t1) + (t2 + t3). The AVX2 kernel replays this exact
// sequence lane-wise, which is what makes the two paths bit-identical.
inline void hamilton1(const double* a, const double* b, double* out) {
  const double aw = a[0], ax = a[1], ay = a[2], az = a[3];
  const double bw = b[0], bx = b[1], by = b[2], bz = b[3];

  const double t0w = aw * bw, t0x = aw * bx, t0y = aw * by, t0z = aw * bz;
  const double t1w = -(ax * bx), t1x = ax * bw, t1y = -(ax * bz), t1z = ax * by;
  const double t2w = -(ay * by), t2x = ay * bz, t2y = ay * bw, t2z = -(ay * bx);
  const double t3w = -(az * bz), t3x = -(az * by), t3y = az * bx, t3z = az * bw;

  out[0] = (t0w + t1w) + (t2w + t3w);
  out[1] = (t0x + t1x) + (t2x + t3x);
  out[2] = (t0y + t1y) + (t2y + t3y);
  out[3] = (t0z + t1z) + (t2z + t3z);
}

void hamilton_batch_scalar(const double* a, const double* b, double* out,
                           std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    double tmp[4];
    hamilton1(a + 4 * i, b + 4 * i, tmp);
    out[4 * i + 0] = tmp[0];
    out[4 * i + 1] = tmp[1];
    out[4 * i + 2] = tmp[2];
    out[4 * i + 3] = tmp[3];
  }
}

void qgemm_scalar(std::size_t n, const double* a, const double* b, double* c) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double acc[4] = {0.0, 0.0, 0.0, 0.0};
      for (std::size_t k = 0; k < n; ++k) {
        double prod[4];
        hamilton1(a + 4 * (i * n + k), b + 4 * (k * n + j), prod);
        acc[0] += prod[0];
        acc[1] += prod[1];
        acc[2] += prod[2];
        acc[3] += prod[3];
      }
      double* out = c + 4 * (i * n + j);
      out[0] = acc[0];
      out[1] = acc[1];
      out[2] = acc[2];
      out[3] = acc[3];
    }
  }
}

void qgemv_scalar(std::size_t n, const double* a, const double* v,
                  double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) {
      double prod[4];
      hamilton1(a + 4 * (i * n + k), v + 4 * k, prod);
      acc[0] += prod[0];
      acc[1] += prod[1];
      acc[2] += prod[2];
      acc[3] += prod[3];
    }
    out[4 * i + 0] = acc[0];
    out[4 * i + 1] = acc[1];
    out[4 * i + 2] = acc[2];
    out[4 * i + 3] = acc[3];
  }
}

}  // namespace

const Ops& scalar_ops() noexcept {
  static const Ops ops{"scalar", hamilton_batch_scalar, qgemm_scalar,
                       qgemv_scalar};
  return ops;
}

}  // namespace qspectra::kernels
