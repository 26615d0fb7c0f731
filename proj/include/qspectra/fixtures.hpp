#pragma once

#include <cstdint>
#include <string>

#include "qspectra/qmatrix.hpp"

namespace qspectra {

// Deterministic generator (splitmix64) so that fixture files and reports are
// reproducible across platforms and standard-library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double uniform() {  // [0, 1)
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  double symmetric() { return 2.0 * uniform() - 1.0; }

  Quaternion quaternion() {
    return {symmetric(), symmetric(), symmetric(), symmetric()};
  }

  // Uniform on the unit sphere of H via rejection from the cube.
  Quaternion unit_quaternion() {
    for (;;) {
      const Quaternion q = quaternion();
      const double n = q.norm();
      if (n > 0.1 && n <= 1.0) return q * (1.0 / n);
    }
  }

  // Uniform-ish in the closed unit ball.
  Quaternion ball_quaternion() {
    for (;;) {
      const Quaternion q = quaternion();
      if (q.norm() <= 1.0) return q;
    }
  }

 private:
  std::uint64_t state_;
};

enum class FixtureKind { random, jordan, diagonal, unitary_like };

FixtureKind parse_fixture_kind(const std::string& name);
const char* to_string(FixtureKind k);

// The CLI fixture families. "jordan" is the marginal block with eigenvalue 1
// regardless of seed; "diagonal" draws entries in the unit ball;
// "unitary-like" draws unit quaternions on the diagonal.
QMatrix make_fixture(FixtureKind kind, std::uint64_t seed, std::size_t n);

// Random matrix rescaled so that ||T|| equals target_norm.
QMatrix random_contraction(std::uint64_t seed, std::size_t n,
                           double target_norm);

// S (I + scale * N) S^{-1} for a mild random similarity S and the nilpotent
// superdiagonal N; probes the rigidity statement near the identity.
QMatrix near_identity_similarity(std::uint64_t seed, std::size_t n,
                                 double scale);

}  // namespace qspectra
