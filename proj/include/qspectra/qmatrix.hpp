#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "qspectra/config.hpp"
#include "qspectra/errors.hpp"
#include "qspectra/quaternion.hpp"

namespace qspectra {

using QVector = std::vector<Quaternion>;
using CMatrix = Eigen::MatrixXcd;

// Dense n x n quaternion matrix acting on H^n as a right-linear operator:
// (T v)_i = sum_j T_ij * v_j, so v -> T v commutes with right scalar
// multiplication. Immutable in spirit: all operations return new values.
class QMatrix {
 public:
  QMatrix() = default;
  explicit QMatrix(std::size_t n) : n_(n), e_(n * n) {}

  static QMatrix identity(std::size_t n);
  static QMatrix zero(std::size_t n) { return QMatrix(n); }
  // The scalar operator q*I: q on every diagonal entry.
  static QMatrix scalar(const Quaternion& q, std::size_t n);

  std::size_t dim() const { return n_; }

  Quaternion& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const Quaternion& operator()(std::size_t i, std::size_t j) const {
    return e_[i * n_ + j];
  }

  const Quaternion* data() const { return e_.data(); }
  Quaternion* data() { return e_.data(); }

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  QMatrix& operator*=(double c);

  // Entrywise q * T_ij and T_ij * q (the two-sided module structure).
  QMatrix scaled_left(const Quaternion& q) const;
  QMatrix scaled_right(const Quaternion& q) const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);

  bool operator==(const QMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }

 private:
  std::size_t n_ = 0;
  std::vector<Quaternion> e_;
};

QMatrix operator+(QMatrix a, const QMatrix& b);
QMatrix operator-(QMatrix a, const QMatrix& b);
QMatrix operator-(const QMatrix& a);
QMatrix operator*(QMatrix a, double c);
QMatrix operator*(double c, QMatrix a);

QVector mat_apply(const QMatrix& t, const QVector& v);

// Largest entrywise quaternion modulus; cheap metric for tests.
double max_abs(const QMatrix& t);

// Complex adjoint: split T = A + B j along C_i and form the 2n x 2n complex
// matrix [[A, B], [-conj(B), conj(A)]]. The map is an algebra homomorphism
// and an isometry for the operator norm, so all spectral work happens there.
CMatrix complex_adjoint(const QMatrix& t);
QMatrix from_adjoint(const CMatrix& m, double eps = kEpsilon);

double op_norm(const QMatrix& t);

// Inverse through the adjoint SVD. Invertibility is a relative test:
// sigma_min > eps * sigma_max. Throws Singular otherwise.
QMatrix mat_inv(const QMatrix& t, double eps = kEpsilon);

QMatrix mat_pow(const QMatrix& t, unsigned n);

}  // namespace qspectra
