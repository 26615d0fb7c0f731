#pragma once

#include <vector>

#include "qspectra/config.hpp"
#include "qspectra/qmatrix.hpp"
#include "qspectra/quaternion.hpp"

namespace qspectra {

// One axially symmetric sphere [x + y*S] in the (x, y >= 0) half-plane.
// y == 0 degenerates to the real point x. |s| and |s - 1| are constant over
// the sphere, which is all the power diagnostics ever need.
struct SpectralSphere {
  double x = 0.0;
  double y = 0.0;

  double modulus() const { return std::hypot(x, y); }
  double dist_to_one() const { return std::hypot(x - 1.0, y); }
};

inline double half_plane_dist(const SpectralSphere& a, const SpectralSphere& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

struct SSpectrum {
  std::vector<SpectralSphere> spheres;

  double max_modulus() const {
    double r = 0.0;
    for (const auto& s : spheres) r = std::max(r, s.modulus());
    return r;
  }
};

enum class Side { left, right };

inline const char* to_string(Side s) { return s == Side::left ? "left" : "right"; }

// Pencil Q_s(T) = T^2 - 2 Re(s) T + |s|^2 I; depends on s only through
// (Re s, |s|), hence constant on spheres.
QMatrix q_pencil(const QMatrix& t, const Quaternion& s);

// Q_s(T)^{-1}; throws SpectrumPoint when the pencil is not invertible.
QMatrix pseudo_resolvent(const QMatrix& t, const Quaternion& s,
                         double eps = kEpsilon);

struct ResolventMembership {
  bool in_resolvent_set = false;
  double margin = 0.0;  // sigma_min of the adjoint pencil
};

// The definitional membership oracle: invertibility of Q_s(T) decided by a
// relative sigma_min test on the complex adjoint. The eigenvalue route in
// s_spectrum is validated against this.
ResolventMembership in_s_resolvent_set(const QMatrix& t, const Quaternion& s,
                                       double eps = kEpsilon);

// Sphere set of the S-spectrum, computed from the eigenvalues of the complex
// adjoint (conjugate pairs collapse onto one sphere), deduplicated within
// eps * (1 + |x| + y) and sorted.
SSpectrum s_spectrum(const QMatrix& t, double eps = kEpsilon);

double s_spectral_radius(const QMatrix& t, double eps = kEpsilon);

// (||T^n||^{1/n})_{n=1..n_max}; the tail approaches the S-spectral radius.
std::vector<double> gelfand_radius(const QMatrix& t, int n_max);

// Spheres with | |s| - 1 | <= tol.
SSpectrum peripheral_spectrum(const QMatrix& t, double tol,
                              double eps = kEpsilon);

// S_L^{-1}(s,T) = Q_s(T)^{-1} (conj(s) I - T)
// S_R^{-1}(s,T) = (conj(s) I - T) Q_s(T)^{-1}
QMatrix s_resolvent(Side side, const QMatrix& t, const Quaternion& s,
                    double eps = kEpsilon);

// n-th resolvent powers in closed form:
//   S_L^{-n} = Q_s(T)^{-n} sum_m C(n,m) (-T)^m conj(s)^{n-m}
//   S_R^{-n} = [sum_m C(n,m) conj(s)^{n-m} (-T)^m] Q_s(T)^{-n}
// The binomial sums are evaluated as n-fold applications of the commuting
// maps M -> M conj(s) - T M (left) and M -> conj(s) M - M T (right), which
// is the same polynomial without the catastrophic cancellation of the
// term-by-term sum near |s| = 1.
QMatrix s_resolvent_pow(Side side, const QMatrix& t, const Quaternion& s,
                        unsigned n, double eps = kEpsilon);

// Independent series oracle for the left resolvent powers:
//   sum_m C(m+n-1, n-1) T^m s^{-(m+n)},
// truncated once a geometric tail bound drops below tail_tol. Throws
// Divergent when |s| <= r_S(T) + eps.
QMatrix resolvent_series_oracle(const QMatrix& t, const Quaternion& s,
                                unsigned n, double tail_tol,
                                double eps = kEpsilon);

}  // namespace qspectra
