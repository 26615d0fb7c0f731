#include "qspectra/fixtures.hpp"

#include "qspectra/errors.hpp"

namespace qspectra {

FixtureKind parse_fixture_kind(const std::string& name) {
  if (name == "random") return FixtureKind::random;
  if (name == "jordan") return FixtureKind::jordan;
  if (name == "diagonal") return FixtureKind::diagonal;
  if (name == "unitary-like") return FixtureKind::unitary_like;
  throw Error(Errc::parse_error, "unknown fixture kind: " + name);
}

const char* to_string(FixtureKind k) {
  switch (k) {
    case FixtureKind::random: return "random";
    case FixtureKind::jordan: return "jordan";
    case FixtureKind::diagonal: return "diagonal";
    case FixtureKind::unitary_like: return "unitary-like";
  }
  return "?";
}

QMatrix make_fixture(FixtureKind kind, std::uint64_t seed, std::size_t n) {
  if (n < 1) throw Error(Errc::domain_error, "fixture dimension must be >= 1");
  Rng rng(seed);
  QMatrix t(n);
  switch (kind) {
    case FixtureKind::random:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t(i, j) = rng.quaternion();
      break;
    case FixtureKind::jordan:
      for (std::size_t i = 0; i < n; ++i) {
        t(i, i) = kOne;
        if (i + 1 < n) t(i, i + 1) = kOne;
      }
      break;
    case FixtureKind::diagonal:
      for (std::size_t i = 0; i < n; ++i) t(i, i) = rng.ball_quaternion();
      break;
    case FixtureKind::unitary_like:
      for (std::size_t i = 0; i < n; ++i) t(i, i) = rng.unit_quaternion();
      break;
  }
  return t;
}

QMatrix random_contraction(std::uint64_t seed, std::size_t n,
                           double target_norm) {
  QMatrix t = make_fixture(FixtureKind::random, seed, n);
  const double norm = op_norm(t);
  if (norm == 0.0) return t;
  return t * (target_norm / norm);
}

QMatrix near_identity_similarity(std::uint64_t seed, std::size_t n,
                                 double scale) {
  Rng rng(seed);
  QMatrix s = QMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) += rng.quaternion() * 0.2;
  QMatrix core = QMatrix::identity(n);
  for (std::size_t i = 0; i + 1 < n; ++i) core(i, i + 1) = Quaternion(scale);
  return s * core * mat_inv(s);
}

}  // namespace qspectra
