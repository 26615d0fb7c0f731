#include "qspectra/sspectrum.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace qspectra {

QMatrix q_pencil(const QMatrix& t, const Quaternion& s) {
  QMatrix p = t * t;
  p -= t * (2.0 * s.real());
  p += QMatrix::scalar(Quaternion(s.norm_sq()), t.dim());
  return p;
}

namespace {

struct PencilSvd {
  Eigen::JacobiSVD<CMatrix> svd;
  double sigma_max = 0.0;
  double sigma_min = 0.0;
};

PencilSvd pencil_svd(const QMatrix& t, const Quaternion& s, unsigned options) {
  PencilSvd out{Eigen::JacobiSVD<CMatrix>(complex_adjoint(q_pencil(t, s)),
                                          options),
                0.0, 0.0};
  const auto& sv = out.svd.singularValues();
  out.sigma_max = sv(0);
  out.sigma_min = sv(sv.size() - 1);
  return out;
}

QMatrix from_adjoint_avg(const CMatrix& m) {
  // Same reconstruction as from_adjoint but without the shape check; the
  // inputs here are inverses of adjoint-shaped matrices.
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

QMatrix pseudo_resolvent(const QMatrix& t, const Quaternion& s, double eps) {
  auto p = pencil_svd(t, s, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (!(p.sigma_min > eps * p.sigma_max))
    throw Error(Errc::spectrum_point,
                "pencil singular at s (sigma_min=" + std::to_string(p.sigma_min) +
                    ")");
  CMatrix inv = p.svd.matrixV() *
                p.svd.singularValues().cwiseInverse().asDiagonal() *
                p.svd.matrixU().adjoint();
  return from_adjoint_avg(inv);
}

ResolventMembership in_s_resolvent_set(const QMatrix& t, const Quaternion& s,
                                       double eps) {
  auto p = pencil_svd(t, s, 0);
  return {p.sigma_min > eps * p.sigma_max, p.sigma_min};
}

SSpectrum s_spectrum(const QMatrix& t, double eps) {
  Eigen::ComplexEigenSolver<CMatrix> es(complex_adjoint(t), false);
  if (es.info() != Eigen::Success)
    throw Error(Errc::domain_error, "eigensolver failed to converge");

  std::vector<std::pair<double, double>> pts;
  pts.reserve(static_cast<std::size_t>(es.eigenvalues().size()));
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    const auto lambda = es.eigenvalues()(k);
    pts.emplace_back(lambda.real(), std::abs(lambda.imag()));
  }
  std::sort(pts.begin(), pts.end());

  // Adjoint eigenvalues come in conjugate pairs, so after folding into the
  // half-plane the sorted list is consecutive near-duplicates. Collapse each
  // pair to its midpoint; this caps the sphere count at n.
  std::vector<SpectralSphere> paired;
  for (std::size_t k = 0; k + 1 < pts.size(); k += 2) {
    paired.push_back(SpectralSphere{0.5 * (pts[k].first + pts[k + 1].first),
                                    0.5 * (pts[k].second + pts[k + 1].second)});
  }

  SSpectrum out;
  for (const auto& sphere : paired) {
    bool merged = false;
    for (auto& kept : out.spheres) {
      const double tol = eps * (1.0 + std::abs(kept.x) + kept.y);
      if (half_plane_dist(kept, sphere) <= tol) {
        kept.x = 0.5 * (kept.x + sphere.x);
        kept.y = 0.5 * (kept.y + sphere.y);
        merged = true;
        break;
      }
    }
    if (!merged) out.spheres.push_back(sphere);
  }
  std::sort(out.spheres.begin(), out.spheres.end(),
            [](const SpectralSphere& a, const SpectralSphere& b) {
              return a.x != b.x ? a.x < b.x : a.y < b.y;
            });
  return out;
}

double s_spectral_radius(const QMatrix& t, double eps) {
  return s_spectrum(t, eps).max_modulus();
}

std::vector<double> gelfand_radius(const QMatrix& t, int n_max) {
  if (n_max < 1)
    throw Error(Errc::domain_error, "gelfand_radius requires n_max >= 1");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n_max));
  QMatrix p = QMatrix::identity(t.dim());
  for (int n = 1; n <= n_max; ++n) {
    p = p * t;
    out.push_back(std::pow(op_norm(p), 1.0 / n));
  }
  return out;
}

SSpectrum peripheral_spectrum(const QMatrix& t, double tol, double eps) {
  SSpectrum out;
  for (const auto& s : s_spectrum(t, eps).spheres)
    if (std::abs(s.modulus() - 1.0) <= tol) out.spheres.push_back(s);
  return out;
}

QMatrix s_resolvent(Side side, const QMatrix& t, const Quaternion& s,
                    double eps) {
  const QMatrix qinv = pseudo_resolvent(t, s, eps);
  const QMatrix sbar = QMatrix::scalar(s.conj(), t.dim()) - t;
  return side == Side::left ? qinv * sbar : sbar * qinv;
}

QMatrix s_resolvent_pow(Side side, const QMatrix& t, const Quaternion& s,
                        unsigned n, double eps) {
  if (n == 0)
    throw Error(Errc::domain_error, "resolvent power requires n >= 1");
  const QMatrix qinv = pseudo_resolvent(t, s, eps);
  const Quaternion sbar = s.conj();

  QMatrix poly = QMatrix::identity(t.dim());
  for (unsigned k = 0; k < n; ++k) {
    poly = side == Side::left ? poly.scaled_right(sbar) - t * poly
                              : poly.scaled_left(sbar) - poly * t;
  }
  QMatrix qpowinv = QMatrix::identity(t.dim());
  for (unsigned k = 0; k < n; ++k) qpowinv = qpowinv * qinv;

  return side == Side::left ? qpowinv * poly : poly * qpowinv;
}

QMatrix resolvent_series_oracle(const QMatrix& t, const Quaternion& s,
                                unsigned n, double tail_tol, double eps) {
  if (n == 0)
    throw Error(Errc::domain_error, "series oracle requires n >= 1");
  const double mod_s = s.norm();
  const double r_s = s_spectral_radius(t, eps);
  if (mod_s <= r_s + eps)
    throw Error(Errc::divergent, "|s| <= S-spectral radius, series diverges");

  const Quaternion s_inv = inverse(s, eps);
  const double t_norm = op_norm(t);

  QMatrix sum = QMatrix::zero(t.dim());
  QMatrix t_pow = QMatrix::identity(t.dim());        // T^m
  Quaternion s_inv_pow = qpow(s_inv, n);             // s^{-(m+n)}
  double coeff = 1.0;                                // C(m+n-1, n-1)

  const double q_norm = t_norm / mod_s;
  double prev_term = 0.0;
  int small_streak = 0;
  const unsigned m_cap = 200000;
  for (unsigned m = 0;; ++m) {
    const QMatrix term = t_pow.scaled_right(s_inv_pow * coeff);
    sum += term;

    const double term_size = op_norm(term);
    bool done = false;
    if (m >= 10 * n && q_norm < 0.9) {
      // For m >= 10 n the binomial ratio C(m+n, n-1)/C(m+n-1, n-1) is below
      // 1.1, so the tail is dominated by a geometric series in 1.1 * q.
      const double qq = 1.1 * q_norm;
      if (term_size * qq / (1.0 - qq) < tail_tol) done = true;
    } else if (m >= 10 * n) {
      // |s| <= ||T||: fall back to an empirical ratio test.
      small_streak = term_size < 0.25 * tail_tol &&
                             (prev_term == 0.0 || term_size <= prev_term)
                         ? small_streak + 1
                         : 0;
      if (small_streak >= 8) done = true;
    }
    prev_term = term_size;
    if (done) break;
    if (m >= m_cap)
      throw Error(Errc::divergent, "series oracle failed to converge");

    t_pow = t_pow * t;
    s_inv_pow = s_inv_pow * s_inv;
    coeff *= static_cast<double>(m + n) / static_cast<double>(m + 1);
  }
  return sum;
}

}  // namespace qspectra
