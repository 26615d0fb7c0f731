#include "qspectra/qmatrix.hpp"

#include <complex>
#include <cstring>
#include <string>

#include "qspectra/kernels.hpp"

namespace qspectra {

static_assert(sizeof(Quaternion) == 4 * sizeof(double),
              "kernels assume packed (w,x,y,z) layout");

namespace {

const double* raw(const QMatrix& m) {
  return reinterpret_cast<const double*>(m.data());
}
double* raw(QMatrix& m) { return reinterpret_cast<double*>(m.data()); }

void require_same_dim(const QMatrix& a, const QMatrix& b) {
  if (a.dim() != b.dim())
    throw Error(Errc::dimension_mismatch,
                "matrix dimensions " + std::to_string(a.dim()) + " vs " +
                    std::to_string(b.dim()));
}

}  // namespace

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = kOne;
  return m;
}

QMatrix QMatrix::scalar(const Quaternion& q, std::size_t n) {
  QMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = q;
  return m;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  require_same_dim(*this, o);
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  require_same_dim(*this, o);
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
  return *this;
}

QMatrix& QMatrix::operator*=(double c) {
  for (auto& q : e_) q *= c;
  return *this;
}

QMatrix QMatrix::scaled_left(const Quaternion& q) const {
  QMatrix out(n_);
  for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = q * e_[k];
  return out;
}

QMatrix QMatrix::scaled_right(const Quaternion& q) const {
  QMatrix out(n_);
  for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] * q;
  return out;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  require_same_dim(a, b);
  QMatrix c(a.dim());
  kernels::active().qgemm(a.dim(), raw(a), raw(b), raw(c));
  return c;
}

QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
QMatrix operator-(const QMatrix& a) {
  QMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = -a(i, j);
  return out;
}
QMatrix operator*(QMatrix a, double c) { return a *= c; }
QMatrix operator*(double c, QMatrix a) { return a *= c; }

QVector mat_apply(const QMatrix& t, const QVector& v) {
  if (v.size() != t.dim())
    throw Error(Errc::dimension_mismatch,
                "vector length " + std::to_string(v.size()) +
                    " does not match matrix dimension " +
                    std::to_string(t.dim()));
  QVector out(t.dim());
  kernels::active().qgemv(t.dim(), raw(t),
                          reinterpret_cast<const double*>(v.data()),
                          reinterpret_cast<double*>(out.data()));
  return out;
}

double max_abs(const QMatrix& t) {
  double m = 0.0;
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j)
      m = std::max(m, t(i, j).norm());
  return m;
}

CMatrix complex_adjoint(const QMatrix& t) {
  const auto n = static_cast<Eigen::Index>(t.dim());
  CMatrix m(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Quaternion& q = t(static_cast<std::size_t>(i),
                              static_cast<std::size_t>(j));
      const std::complex<double> a(q.w, q.x);  // q = a + b j
      const std::complex<double> b(q.y, q.z);
      m(i, j) = a;
      m(i, n + j) = b;
      m(n + i, j) = -std::conj(b);
      m(n + i, n + j) = std::conj(a);
    }
  }
  return m;
}

namespace {

// Rebuild T from the adjoint blocks, averaging the two redundant copies.
QMatrix from_adjoint_unchecked(const CMatrix& m) {
  const Eigen::Index n = m.rows() / 2;
  QMatrix t(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const std::complex<double> a =
          0.5 * (m(i, j) + std::conj(m(n + i, n + j)));
      const std::complex<double> b =
          0.5 * (m(i, n + j) - std::conj(m(n + i, j)));
      t(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          Quaternion{a.real(), a.imag(), b.real(), b.imag()};
    }
  }
  return t;
}

}  // namespace

QMatrix from_adjoint(const CMatrix& m, double eps) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0)
    throw Error(Errc::not_adjoint_shaped, "adjoint must be square of even size");
  const Eigen::Index n = m.rows() / 2;
  const double scale = 1.0 + m.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double d1 = std::abs(m(i, j) - std::conj(m(n + i, n + j)));
      const double d2 = std::abs(m(i, n + j) + std::conj(m(n + i, j)));
      if (d1 > eps * scale || d2 > eps * scale)
        throw Error(Errc::not_adjoint_shaped,
                    "block symmetry violated beyond tolerance");
    }
  }
  return from_adjoint_unchecked(m);
}

double op_norm(const QMatrix& t) {
  if (t.dim() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(complex_adjoint(t));
  return svd.singularValues()(0);
}

QMatrix mat_inv(const QMatrix& t, double eps) {
  if (t.dim() == 0) return t;
  Eigen::JacobiSVD<CMatrix> svd(complex_adjoint(t),
                                Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  const double smin = sv(sv.size() - 1);
  if (!(smin > eps * smax))
    throw Error(Errc::singular,
                "sigma_min=" + std::to_string(smin) +
                    " below relative threshold (sigma_max=" +
                    std::to_string(smax) + ")");
  CMatrix inv = svd.matrixV() * sv.cwiseInverse().asDiagonal() *
                svd.matrixU().adjoint();
  // The inverse of an adjoint-shaped matrix is adjoint-shaped; averaging the
  // redundant blocks just discards rounding noise.
  return from_adjoint_unchecked(inv);
}

QMatrix mat_pow(const QMatrix& t, unsigned n) {
  QMatrix result = QMatrix::identity(t.dim());
  QMatrix base = t;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

}  // namespace qspectra
