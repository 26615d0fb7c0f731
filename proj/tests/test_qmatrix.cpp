#include <doctest.h>

#include <cmath>

#include "qspectra/fixtures.hpp"
#include "qspectra/qmatrix.hpp"

using namespace qspectra;

namespace {

QMatrix random_matrix(std::uint64_t seed, std::size_t n) {
  return make_fixture(FixtureKind::random, seed, n);
}

}  // namespace

TEST_SUITE_BEGIN("qmatrix");

TEST_CASE("apply: identity, right-linearity, hand example") {
  Rng rng(31);
  const QMatrix id = QMatrix::identity(3);
  QVector v{rng.quaternion(), rng.quaternion(), rng.quaternion()};
  const QVector iv = mat_apply(id, v);
  for (std::size_t k = 0; k < v.size(); ++k)
    CHECK(approx_equal(iv[k], v[k], 0.0));

  // T(v q + w) = (T v) q + T w
  const QMatrix t = random_matrix(32, 3);
  const Quaternion q = rng.quaternion();
  QVector w{rng.quaternion(), rng.quaternion(), rng.quaternion()};
  QVector combo(3);
  for (std::size_t k = 0; k < 3; ++k) combo[k] = v[k] * q + w[k];
  const QVector lhs = mat_apply(t, combo);
  const QVector tv = mat_apply(t, v);
  const QVector tw = mat_apply(t, w);
  for (std::size_t k = 0; k < 3; ++k)
    CHECK(approx_equal(lhs[k], tv[k] * q + tw[k], 1e-12));

  // [[0,1],[0,0]] (0,k)^T = (k,0)^T
  QMatrix shift(2);
  shift(0, 1) = kOne;
  const QVector out = mat_apply(shift, {Quaternion{}, kK});
  CHECK(approx_equal(out[0], kK, 0.0));
  CHECK(approx_equal(out[1], Quaternion{}, 0.0));

  CHECK_THROWS_AS((void)mat_apply(shift, QVector(3)), Error);
}

TEST_CASE("complex adjoint structure") {
  const CMatrix id_adjoint = complex_adjoint(QMatrix::identity(3));
  CHECK((id_adjoint - CMatrix::Identity(6, 6)).norm() == 0.0);

  // adjoint(j * I_1) = [[0, 1], [-1, 0]]
  const CMatrix ja = complex_adjoint(QMatrix::scalar(kJ, 1));
  CHECK(ja(0, 0) == std::complex<double>(0, 0));
  CHECK(ja(0, 1) == std::complex<double>(1, 0));
  CHECK(ja(1, 0) == std::complex<double>(-1, 0));
  CHECK(ja(1, 1) == std::complex<double>(0, 0));
}

TEST_CASE("adjoint is a homomorphism and inverts exactly") {
  for (int trial = 0; trial < 10; ++trial) {
    const QMatrix s = random_matrix(100 + trial, 3);
    const QMatrix t = random_matrix(200 + trial, 3);
    const CMatrix lhs = complex_adjoint(s * t);
    const CMatrix rhs = complex_adjoint(s) * complex_adjoint(t);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);

    CHECK(from_adjoint(complex_adjoint(t)) == t);  // exact round trip
  }

  CMatrix bad = complex_adjoint(random_matrix(5, 2));
  bad(0, 0) += std::complex<double>(1e-3, 0.0);
  CHECK_THROWS_AS((void)from_adjoint(bad), Error);
  try {
    (void)from_adjoint(bad);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_adjoint_shaped);
  }
}

TEST_CASE("operator norm") {
  CHECK(op_norm(QMatrix::identity(4)) == doctest::Approx(1.0).epsilon(1e-14));
  Rng rng(41);
  const Quaternion q = rng.quaternion();
  CHECK(op_norm(QMatrix::scalar(q, 3)) ==
        doctest::Approx(q.norm()).epsilon(1e-13));

  QMatrix two(2);
  two(0, 1) = Quaternion(2.0);
  CHECK(op_norm(two) == doctest::Approx(2.0).epsilon(1e-14));

  for (int trial = 0; trial < 8; ++trial) {
    const QMatrix t = random_matrix(300 + trial, 3);
    const double n1 = op_norm(t);
    const double n2 = op_norm(t * t);
    const double n3 = op_norm(t * t * t);
    CHECK(n2 <= n1 * n1 * (1 + 1e-12));
    CHECK(n3 <= n2 * n1 * (1 + 1e-12));
  }
}

TEST_CASE("matrix inverse") {
  const QMatrix id = QMatrix::identity(3);
  CHECK(op_norm(mat_inv(id) - id) < 1e-14);

  QMatrix d(2);
  d(0, 0) = Quaternion(2.0);
  d(1, 1) = kJ;
  const QMatrix dinv = mat_inv(d);
  CHECK(approx_equal(dinv(0, 0), Quaternion(0.5), 1e-14));
  CHECK(approx_equal(dinv(1, 1), -kJ, 1e-14));
  CHECK(op_norm(d * dinv - QMatrix::identity(2)) < 1e-14);

  CHECK_THROWS_AS((void)mat_inv(QMatrix::zero(2)), Error);
  try {
    (void)mat_inv(QMatrix::zero(2));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::singular);
  }

  for (int trial = 0; trial < 8; ++trial) {
    const QMatrix t =
        random_matrix(400 + trial, 3) + QMatrix::scalar(Quaternion(4.0), 3);
    const QMatrix tinv = mat_inv(t);
    CHECK(op_norm(t * tinv - QMatrix::identity(3)) < 1e-12);
    CHECK(op_norm(tinv * t - QMatrix::identity(3)) < 1e-12);
    const CMatrix adj_of_inv = complex_adjoint(tinv);
    const CMatrix inv_of_adj = complex_adjoint(t).inverse();
    CHECK((adj_of_inv - inv_of_adj).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("matrix powers") {
  const QMatrix t = random_matrix(55, 3);
  CHECK(mat_pow(t, 0) == QMatrix::identity(3));

  QMatrix nil(2);
  nil(0, 1) = kOne;
  CHECK(op_norm(mat_pow(nil, 2)) == 0.0);

  const QMatrix i1 = QMatrix::scalar(kI, 1);
  CHECK(op_norm(mat_pow(i1, 4) - QMatrix::identity(1)) < 1e-15);

  QMatrix repeated = QMatrix::identity(3);
  for (int k = 0; k < 7; ++k) repeated = repeated * t;
  CHECK(op_norm(mat_pow(t, 7) - repeated) < 1e-12 * op_norm(repeated));
}

TEST_SUITE_END();
