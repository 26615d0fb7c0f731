#include "qspectra/powan.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qspectra {

const char* to_string(PowerClass c) {
  switch (c) {
    case PowerClass::bounded: return "bounded";
    case PowerClass::unbounded: return "unbounded";
    case PowerClass::marginal: return "marginal";
  }
  return "?";
}

const char* to_string(KTVerdict v) {
  switch (v) {
    case KTVerdict::converges: return "converges";
    case KTVerdict::stagnates: return "stagnates";
    case KTVerdict::undetermined: return "undetermined";
    case KTVerdict::inconsistent: return "inconsistent";
    case KTVerdict::not_applicable: return "not-applicable";
  }
  return "?";
}

PowerReport power_norms(const QMatrix& t, int n, double eps) {
  if (n < 1) throw Error(Errc::domain_error, "power_norms requires N >= 1");
  PowerReport rep;
  rep.norms.reserve(static_cast<std::size_t>(n) + 1);
  QMatrix p = QMatrix::identity(t.dim());
  rep.norms.push_back(op_norm(p));
  for (int k = 1; k <= n; ++k) {
    p = p * t;
    rep.norms.push_back(op_norm(p));
  }
  rep.p_n = *std::max_element(rep.norms.begin(), rep.norms.end());
  rep.r_s = s_spectral_radius(t, eps);

  const std::size_t q0 = rep.norms.size() * 3 / 4;
  rep.tail_slope = (rep.norms.back() - rep.norms[q0]) /
                   static_cast<double>(rep.norms.size() - 1 - q0);

  const std::size_t burn_in = rep.norms.size() / 4;
  bool non_increasing = true;
  for (std::size_t k = burn_in; k + 1 < rep.norms.size(); ++k)
    if (rep.norms[k + 1] > rep.norms[k] * (1.0 + 1e-12)) non_increasing = false;

  std::ostringstream ev;
  ev << "r_S=" << rep.r_s << ", p_" << n << "=" << rep.p_n
     << ", tail slope=" << rep.tail_slope;
  if (rep.r_s > 1.0 + eps) {
    rep.classification = PowerClass::unbounded;
    ev << "; r_S exceeds 1";
  } else if (rep.r_s < 1.0 - eps) {
    rep.classification = PowerClass::bounded;
    ev << "; r_S below 1";
  } else if (non_increasing) {
    rep.classification = PowerClass::bounded;
    ev << "; r_S = 1 within epsilon, norms non-increasing after burn-in";
  } else {
    rep.classification = PowerClass::marginal;
    ev << "; r_S = 1 within epsilon, norm trend over last quartile decides nothing";
  }
  rep.evidence = ev.str();
  return rep;
}

KreissReport kreiss_scan(const QMatrix& t, const ScanGrid& grid, double eps) {
  KreissReport rep;
  rep.grid = grid;
  for (std::size_t ri = 0; ri < grid.radii.size(); ++ri) {
    for (std::size_t ai = 0; ai < grid.angles.size(); ++ai) {
      for (std::size_t xi = 0; xi < grid.axes.size(); ++xi) {
        const Quaternion s = grid.point(ri, ai, xi);
        const double value = (grid.radii[ri] - 1.0) *
                             op_norm(s_resolvent(Side::left, t, s, eps));
        KreissEntry e{grid.radii[ri], grid.angles[ai], xi, value};
        rep.entries.push_back(e);
        if (value > rep.c_est) {
          rep.c_est = value;
          rep.witness = e;
        }
      }
    }
  }
  return rep;
}

KTReport kt_scan(const QMatrix& t, int n, double tol, double eps) {
  if (n < 2) throw Error(Errc::domain_error, "kt_scan requires N >= 2");
  KTReport rep;
  rep.applicable =
      power_norms(t, n, eps).classification == PowerClass::bounded;

  // One multiplication per step; d_n and the norms share the rounding path.
  rep.d.reserve(static_cast<std::size_t>(n));
  QMatrix p = t;
  for (int k = 1; k <= n; ++k) {
    const QMatrix next = p * t;
    rep.d.push_back(op_norm(p - next));
    p = next;
  }

  rep.peripheral = peripheral_spectrum(t, 1e-8, eps);
  for (const auto& sphere : rep.peripheral.spheres) {
    rep.lower_bounds.push_back(sphere.dist_to_one());
    rep.lower_bound_max = std::max(rep.lower_bound_max, rep.lower_bounds.back());
  }
  rep.spectral_predicts_convergence = rep.lower_bound_max <= 1e-8;

  if (!rep.applicable) {
    rep.verdict = KTVerdict::not_applicable;
    return rep;
  }

  const double d_last = rep.d.back();
  const double d_half = rep.d[rep.d.size() / 2 - 1];
  double d_min_tail = d_last;
  for (std::size_t k = rep.d.size() / 2; k < rep.d.size(); ++k)
    d_min_tail = std::min(d_min_tail, rep.d[k]);

  KTVerdict trend = KTVerdict::undetermined;
  if (d_last < tol && d_last <= d_half) trend = KTVerdict::converges;
  else if (d_min_tail > 10.0 * tol) trend = KTVerdict::stagnates;

  if (trend == KTVerdict::converges && !rep.spectral_predicts_convergence)
    rep.verdict = KTVerdict::inconsistent;
  else if (trend == KTVerdict::stagnates && rep.spectral_predicts_convergence)
    rep.verdict = KTVerdict::inconsistent;
  else
    rep.verdict = trend;
  return rep;
}

RittReport ritt_scan(const QMatrix& t, double alpha, const ScanGrid& grid,
                     double eps) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw Error(Errc::domain_error, "ritt_scan requires 0 < alpha <= 1");
  RittReport rep;
  rep.alpha = alpha;
  rep.grid = grid;
  rep.per_radius_max.assign(grid.radii.size(), 0.0);

  for (std::size_t ri = 0; ri < grid.radii.size(); ++ri) {
    for (std::size_t ai = 0; ai < grid.angles.size(); ++ai) {
      for (std::size_t xi = 0; xi < grid.axes.size(); ++xi) {
        const Quaternion s = grid.point(ri, ai, xi);
        const double dist = (s - kOne).norm();
        const double value =
            std::pow(dist, 1.0 + alpha) *
            op_norm(s_resolvent_pow(Side::left, t, s, 2, eps));
        RittEntry e{grid.radii[ri], grid.angles[ai], xi, value};
        rep.entries.push_back(e);
        rep.per_radius_max[ri] = std::max(rep.per_radius_max[ri], value);
        rep.c_est = std::max(rep.c_est, value);
      }
    }
  }

  rep.gamma_in_one = true;
  for (const auto& sphere : peripheral_spectrum(t, 1e-8, eps).spheres)
    if (sphere.dist_to_one() > 1e-8) rep.gamma_in_one = false;

  // Radii are ordered coarse-to-fine (descending). Two consecutive growth
  // steps at the finest end mark the table as divergent toward s = 1; this
  // mirrors the two-adjacent-radii rule of the Yosida scan.
  const std::size_t m = rep.per_radius_max.size();
  if (m >= 3) {
    const double a = rep.per_radius_max[m - 3];
    const double b = rep.per_radius_max[m - 2];
    const double c = rep.per_radius_max[m - 1];
    rep.table_diverges = (b > 1.25 * a) && (c > 1.25 * b);
  }
  rep.hypothesis_met = rep.gamma_in_one && !rep.table_diverges;
  rep.conclusion_observed =
      power_norms(t, 200, eps).classification == PowerClass::bounded;
  return rep;
}

RittReport ritt_scan(const QMatrix& t, double alpha, double eps) {
  return ritt_scan(t, alpha, ScanGrid::ritt_defaults(), eps);
}

GelfandRigidityReport gelfand_rigidity_check(const QMatrix& t, int n,
                                             double sup_bound,
                                             double spectrum_tol, double eps) {
  if (n < 1)
    throw Error(Errc::domain_error, "gelfand_rigidity_check requires N >= 1");
  GelfandRigidityReport rep;
  const QMatrix t_inv = mat_inv(t, eps);  // Singular propagates

  QMatrix p = QMatrix::identity(t.dim());
  QMatrix q = p;
  rep.sup_norm = op_norm(p);
  for (int k = 1; k <= n; ++k) {
    p = p * t;
    q = q * t_inv;
    rep.sup_norm = std::max({rep.sup_norm, op_norm(p), op_norm(q)});
  }
  rep.powers_bounded = rep.sup_norm <= sup_bound;

  rep.spectrum = s_spectrum(t, eps);
  rep.spectrum_is_one = true;
  for (const auto& sphere : rep.spectrum.spheres)
    if (sphere.dist_to_one() > spectrum_tol) rep.spectrum_is_one = false;

  rep.dist_identity = op_norm(t - QMatrix::identity(t.dim()));
  return rep;
}

}  // namespace qspectra
