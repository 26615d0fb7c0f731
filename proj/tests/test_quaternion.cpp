#include <doctest.h>

#include <cmath>

#include "qspectra/fixtures.hpp"
#include "qspectra/quaternion.hpp"

using namespace qspectra;

TEST_SUITE_BEGIN("quaternion");

TEST_CASE("multiplication table") {
  CHECK(approx_equal(kI * kJ, kK, 0.0));
  CHECK(approx_equal(kJ * kK, kI, 0.0));
  CHECK(approx_equal(kK * kI, kJ, 0.0));
  CHECK(approx_equal(kI * kI, -kOne, 0.0));
  CHECK(approx_equal(kJ * kJ, -kOne, 0.0));
  CHECK(approx_equal(kK * kK, -kOne, 0.0));
  CHECK(approx_equal(kI * kJ * kK, -kOne, 0.0));

  Rng rng(7);
  for (int k = 0; k < 32; ++k) {
    const Quaternion q = rng.quaternion();
    CHECK(approx_equal(kOne * q, q, 0.0));
    CHECK(approx_equal(q * kOne, q, 0.0));
  }
}

TEST_CASE("hand-expanded products") {
  // (1+i)(1-i) = 1 - i + i - i^2 = 2
  const Quaternion a{1, 1, 0, 0};
  const Quaternion b{1, -1, 0, 0};
  CHECK(approx_equal(a * b, Quaternion(2.0), 1e-15));
  // Noncommutativity witness.
  const Quaternion p{0, 1, 1, 0};
  const Quaternion q{0, 0, 1, 1};
  CHECK((p * q - q * p).norm() > 0.5);
}

TEST_CASE("norm and conjugation are multiplicative/antimultiplicative") {
  Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    const Quaternion a = rng.quaternion();
    const Quaternion b = rng.quaternion();
    CHECK((a * b).norm() ==
          doctest::Approx(a.norm() * b.norm()).epsilon(1e-13));
    CHECK(approx_equal((a * b).conj(), b.conj() * a.conj(), 1e-13));
    // q * conj(q) is the real scalar |q|^2.
    const Quaternion qc = a * a.conj();
    CHECK(qc.imag_norm() <= 1e-13 * a.norm_sq());
    CHECK(qc.w == doctest::Approx(a.norm_sq()).epsilon(1e-13));
    // Every quaternion solves q^2 - 2 Re(q) q + |q|^2 = 0.
    const Quaternion residue =
        a * a - 2.0 * a.real() * a + Quaternion(a.norm_sq());
    CHECK(residue.norm() <= 1e-12 * (1.0 + a.norm_sq()));
  }
}

TEST_CASE("inverse") {
  CHECK(approx_equal(inverse(kI), -kI, 1e-15));
  CHECK(approx_equal(inverse(Quaternion(2.0)), Quaternion(0.5), 1e-15));
  // (1+j)^{-1} = (1-j)/2, checked by product.
  const Quaternion q{1, 0, 1, 0};
  CHECK(approx_equal(inverse(q), Quaternion{0.5, 0, -0.5, 0}, 1e-15));
  CHECK(approx_equal(q * inverse(q), kOne, 1e-15));

  Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    const Quaternion a = rng.quaternion() + Quaternion(2.0);
    CHECK(approx_equal(a * inverse(a), kOne, 1e-14));
    CHECK(approx_equal(inverse(a) * a, kOne, 1e-14));
  }

  CHECK_THROWS_AS((void)inverse(Quaternion{}), Error);
  try {
    (void)inverse(Quaternion{});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::zero_divisor);
  }
}

TEST_CASE("unit imaginary squares to -1") {
  Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    const UnitImaginary axis =
        UnitImaginary(rng.symmetric(), rng.symmetric(), rng.symmetric() + 2.0);
    CHECK(approx_equal(axis.value() * axis.value(), -kOne, 1e-14));
    CHECK(axis.value().real() == 0.0);
  }
  CHECK_THROWS_AS(UnitImaginary(0, 0, 0), Error);
}

TEST_CASE("slice decomposition") {
  const SlicePoint p = slice_decompose(Quaternion{3, 4, 0, 0});
  CHECK(p.x == 3.0);
  CHECK(p.y == 4.0);
  CHECK(approx_equal(p.axis.value(), kI, 1e-15));
  CHECK_FALSE(p.degenerate);

  const SlicePoint real_pt = slice_decompose(Quaternion(5.0));
  CHECK(real_pt.x == 5.0);
  CHECK(real_pt.y == 0.0);
  CHECK(real_pt.degenerate);
  CHECK(approx_equal(real_pt.axis.value(), kI, 0.0));

  const SlicePoint m = slice_decompose(Quaternion{1, 1, 1, 1});
  CHECK(m.x == 1.0);
  CHECK(m.y == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  const double c = 1.0 / std::sqrt(3.0);
  CHECK(approx_equal(m.axis.value(), Quaternion{0, c, c, c}, 1e-15));
}

TEST_CASE("embed/decompose round trip") {
  CHECK(approx_equal(embed_slice({0, 1, UnitImaginary::j(), false}), kJ, 0.0));
  CHECK(approx_equal(embed_slice({2.5, 0, UnitImaginary::k(), true}),
                     Quaternion(2.5), 0.0));
  CHECK(approx_equal(embed_slice({1, 2, UnitImaginary::k(), false}),
                     Quaternion{1, 0, 0, 2}, 0.0));

  Rng rng(13);
  for (int k = 0; k < 200; ++k) {
    const Quaternion q = rng.quaternion();
    if (q.imag_norm() <= 1e-6) continue;
    CHECK(approx_equal(embed_slice(slice_decompose(q)), q, 1e-14));
  }
}

TEST_CASE("|s-1| is constant on each sphere") {
  Rng rng(17);
  for (int k = 0; k < 100; ++k) {
    const Quaternion q = rng.quaternion();
    const SlicePoint p = slice_decompose(q);
    const double expected_sq = (p.x - 1.0) * (p.x - 1.0) + p.y * p.y;
    CHECK((q - kOne).norm_sq() == doctest::Approx(expected_sq).epsilon(1e-12));
    // Same sphere, different axis: distance to 1 unchanged.
    const UnitImaginary axis =
        UnitImaginary(rng.symmetric(), rng.symmetric() + 1.5, rng.symmetric());
    const Quaternion rotated = Quaternion(p.x) + axis.value() * p.y;
    CHECK((rotated - kOne).norm_sq() ==
          doctest::Approx(expected_sq).epsilon(1e-12));
  }
}

TEST_SUITE_END();
