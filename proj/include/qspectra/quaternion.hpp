#pragma once

#include <cmath>
#include <ostream>

#include "qspectra/config.hpp"
#include "qspectra/errors.hpp"

namespace qspectra {

// Element of the real quaternion algebra H, components along 1, i, j, k.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_)
      : w(w_), x(x_), y(y_), z(z_) {}
  constexpr explicit Quaternion(double real) : w(real) {}

  bool operator==(const Quaternion&) const = default;

  double real() const { return w; }
  Quaternion imag() const { return {0.0, x, y, z}; }
  Quaternion conj() const { return {w, -x, -y, -z}; }

  double norm_sq() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm_sq()); }
  double imag_norm() const { return std::sqrt(x * x + y * y + z * z); }

  Quaternion& operator+=(const Quaternion& o) {
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    w -= o.w;
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  Quaternion& operator*=(double c) {
    w *= c;
    x *= c;
    y *= c;
    z *= c;
    return *this;
  }
};

inline constexpr Quaternion kOne{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion kI{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion kJ{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion kK{0.0, 0.0, 0.0, 1.0};

inline Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
inline Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
inline Quaternion operator-(const Quaternion& q) { return {-q.w, -q.x, -q.y, -q.z}; }
inline Quaternion operator*(Quaternion q, double c) { return q *= c; }
inline Quaternion operator*(double c, Quaternion q) { return q *= c; }
inline Quaternion operator/(Quaternion q, double c) { return q *= (1.0 / c); }

// Hamilton product. The four-group summation tree mirrors the batched
// kernels exactly, so scalar and SIMD paths produce identical bits.
inline Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  const double t0w = a.w * b.w, t0x = a.w * b.x, t0y = a.w * b.y, t0z = a.w * b.z;
  const double t1w = -(a.x * b.x), t1x = a.x * b.w, t1y = -(a.x * b.z), t1z = a.x * b.y;
  const double t2w = -(a.y * b.y), t2x = a.y * b.z, t2y = a.y * b.w, t2z = -(a.y * b.x);
  const double t3w = -(a.z * b.z), t3x = -(a.z * b.y), t3y = a.z * b.x, t3z = a.z * b.w;
  return {(t0w + t1w) + (t2w + t3w), (t0x + t1x) + (t2x + t3x),
          (t0y + t1y) + (t2y + t3y), (t0z + t1z) + (t2z + t3z)};
}

inline Quaternion inverse(const Quaternion& q, double eps = kEpsilon) {
  const double n2 = q.norm_sq();
  if (std::sqrt(n2) <= eps)
    throw Error(Errc::zero_divisor, "quaternion modulus below epsilon");
  return q.conj() * (1.0 / n2);
}

inline Quaternion qpow(Quaternion q, unsigned n) {
  Quaternion r = kOne;
  for (unsigned k = 0; k < n; ++k) r = r * q;
  return r;
}

inline bool approx_equal(const Quaternion& a, const Quaternion& b,
                         double tol = kEpsilon) {
  return (a - b).norm() <= tol;
}

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << "(" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ")";
}

// Point of the unit 2-sphere of purely imaginary quaternions; the slice unit.
class UnitImaginary {
 public:
  UnitImaginary() : dir_(kI) {}

  UnitImaginary(double x, double y, double z, double eps = kEpsilon)
      : dir_(normalize(Quaternion{0.0, x, y, z}, eps)) {}

  static UnitImaginary from_imag(const Quaternion& q, double eps = kEpsilon) {
    const Quaternion im = q.imag();
    return UnitImaginary(im.x, im.y, im.z, eps);
  }

  static UnitImaginary i() { return UnitImaginary(1.0, 0.0, 0.0); }
  static UnitImaginary j() { return UnitImaginary(0.0, 1.0, 0.0); }
  static UnitImaginary k() { return UnitImaginary(0.0, 0.0, 1.0); }

  const Quaternion& value() const { return dir_; }

 private:
  static Quaternion normalize(const Quaternion& q, double eps) {
    const double n = q.norm();
    if (n <= eps)
      throw Error(Errc::zero_divisor, "cannot normalize a near-zero imaginary part");
    return q * (1.0 / n);
  }

  Quaternion dir_;
};

// Coordinates of a quaternion in its slice plane C_I: q = x + y * axis, y >= 0.
// Real quaternions decompose with y = 0, the default axis i and the
// degenerate flag set; callers must branch on the flag, not on the axis.
struct SlicePoint {
  double x = 0.0;
  double y = 0.0;
  UnitImaginary axis;
  bool degenerate = false;
};

inline SlicePoint slice_decompose(const Quaternion& q, double eps = kEpsilon) {
  SlicePoint p;
  p.x = q.w;
  p.y = q.imag_norm();
  if (p.y <= eps) {
    p.y = p.y == 0.0 ? 0.0 : p.y;
    p.axis = UnitImaginary::i();
    p.degenerate = true;
  } else {
    p.axis = UnitImaginary(q.x, q.y, q.z, eps);
  }
  return p;
}

inline Quaternion embed_slice(const SlicePoint& p) {
  return Quaternion(p.x) + p.axis.value() * p.y;
}

}  // namespace qspectra
