#include <doctest.h>

#include <cstring>
#include <vector>

#include "qspectra/fixtures.hpp"
#include "qspectra/kernels.hpp"
#include "qspectra/quaternion.hpp"

using namespace qspectra;

namespace {

std::vector<double> random_packed(Rng& rng, std::size_t quats) {
  std::vector<double> v(4 * quats);
  for (auto& d : v) d = rng.symmetric() * 3.0;
  return v;
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() &&
         std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_SUITE_BEGIN("kernels");

TEST_CASE("scalar hamilton_batch matches Quaternion operator*") {
  Rng rng(21);
  const std::size_t count = 257;
  const auto a = random_packed(rng, count);
  const auto b = random_packed(rng, count);
  std::vector<double> out(4 * count);
  kernels::scalar_ops().hamilton_batch(a.data(), b.data(), out.data(), count);
  for (std::size_t i = 0; i < count; ++i) {
    const Quaternion qa{a[4 * i], a[4 * i + 1], a[4 * i + 2], a[4 * i + 3]};
    const Quaternion qb{b[4 * i], b[4 * i + 1], b[4 * i + 2], b[4 * i + 3]};
    const Quaternion ref = qa * qb;
    CHECK(out[4 * i + 0] == ref.w);
    CHECK(out[4 * i + 1] == ref.x);
    CHECK(out[4 * i + 2] == ref.y);
    CHECK(out[4 * i + 3] == ref.z);
  }
}

TEST_CASE("scalar qgemm matches a naive loop exactly") {
  Rng rng(22);
  for (std::size_t n : {1, 2, 3, 5, 8}) {
    const auto a = random_packed(rng, n * n);
    const auto b = random_packed(rng, n * n);
    std::vector<double> c(4 * n * n);
    kernels::scalar_ops().qgemm(n, a.data(), b.data(), c.data());

    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Quaternion acc{};
        for (std::size_t k = 0; k < n; ++k) {
          const double* pa = a.data() + 4 * (i * n + k);
          const double* pb = b.data() + 4 * (k * n + j);
          acc += Quaternion{pa[0], pa[1], pa[2], pa[3]} *
                 Quaternion{pb[0], pb[1], pb[2], pb[3]};
        }
        const double* pc = c.data() + 4 * (i * n + j);
        CHECK(pc[0] == acc.w);
        CHECK(pc[1] == acc.x);
        CHECK(pc[2] == acc.y);
        CHECK(pc[3] == acc.z);
      }
    }
  }
}

TEST_CASE("avx2 kernels are bit-identical to the scalar reference") {
  if (!kernels::avx2_available()) {
    MESSAGE("avx2 not available on this host; skipping equivalence checks");
    return;
  }
  const auto& scalar = kernels::scalar_ops();
  const auto& simd = kernels::avx2_ops();
  Rng rng(23);

  SUBCASE("hamilton_batch") {
    for (std::size_t count : {1, 2, 7, 64, 255}) {
      const auto a = random_packed(rng, count);
      const auto b = random_packed(rng, count);
      std::vector<double> out_s(4 * count), out_v(4 * count);
      scalar.hamilton_batch(a.data(), b.data(), out_s.data(), count);
      simd.hamilton_batch(a.data(), b.data(), out_v.data(), count);
      CHECK(bitwise_equal(out_s, out_v));
    }
  }

  SUBCASE("qgemm") {
    for (std::size_t n : {1, 2, 3, 4, 6, 8, 13}) {
      const auto a = random_packed(rng, n * n);
      const auto b = random_packed(rng, n * n);
      std::vector<double> c_s(4 * n * n), c_v(4 * n * n);
      scalar.qgemm(n, a.data(), b.data(), c_s.data());
      simd.qgemm(n, a.data(), b.data(), c_v.data());
      CHECK(bitwise_equal(c_s, c_v));
    }
  }

  SUBCASE("qgemv") {
    for (std::size_t n : {1, 2, 3, 4, 6, 8, 13}) {
      const auto a = random_packed(rng, n * n);
      const auto v = random_packed(rng, n);
      std::vector<double> o_s(4 * n), o_v(4 * n);
      scalar.qgemv(n, a.data(), v.data(), o_s.data());
      simd.qgemv(n, a.data(), v.data(), o_v.data());
      CHECK(bitwise_equal(o_s, o_v));
    }
  }
}

TEST_CASE("active dispatch returns a known implementation") {
  const auto& ops = kernels::active();
  const bool is_scalar = &ops == &kernels::scalar_ops();
  const bool is_avx2 =
      kernels::avx2_available() && &ops == &kernels::avx2_ops();
  CHECK((is_scalar || is_avx2));
}

TEST_SUITE_END();
