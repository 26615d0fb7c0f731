#include "qspectra/yosida.hpp"

#include <cmath>
#include <numbers>

#include "qspectra/powan.hpp"

namespace qspectra {

ScanGrid ScanGrid::defaults() {
  ScanGrid g;
  g.radii = {1.05, 1.1, 1.25, 1.5, 2.0, 4.0};
  const int angle_count = 16;
  for (int k = 0; k < angle_count; ++k)
    g.angles.push_back(-std::numbers::pi +
                       2.0 * std::numbers::pi * k / angle_count);
  const double r3 = 1.0 / std::sqrt(3.0);
  g.axes = {UnitImaginary::i(), UnitImaginary::j(),
            UnitImaginary(r3, r3, r3)};
  g.n_max = 12;
  return g;
}

ScanGrid ScanGrid::ritt_defaults() {
  ScanGrid g;
  for (int k = 0; k <= 8; ++k) g.radii.push_back(1.0 + std::pow(2.0, -k));
  g.angles = {0.0};
  for (int m = 6; m >= 0; --m) {
    const double a = std::numbers::pi * std::pow(2.0, -m - 1);
    g.angles.push_back(a);
    g.angles.push_back(-a);
  }
  g.angles.push_back(std::numbers::pi);
  const double r3 = 1.0 / std::sqrt(3.0);
  g.axes = {UnitImaginary::i(), UnitImaginary::j(),
            UnitImaginary(r3, r3, r3)};
  g.n_max = 2;
  return g;
}

Quaternion ScanGrid::point(std::size_t radius_idx, std::size_t angle_idx,
                           std::size_t axis_idx) const {
  const double r = radii[radius_idx];
  const double a = angles[angle_idx];
  return Quaternion(r * std::cos(a)) +
         axes[axis_idx].value() * (r * std::sin(a));
}

QMatrix yosida(Side side, const QMatrix& t, const Quaternion& s, double eps) {
  const QMatrix res = s_resolvent(side, t, s, eps);
  const QMatrix s_id = QMatrix::scalar(s, t.dim());
  const Quaternion s2 = s * s;
  return side == Side::left ? res.scaled_right(s2) - s_id
                            : res.scaled_left(s2) - s_id;
}

QMatrix yosida_pow(Side side, const QMatrix& t, const Quaternion& s,
                   unsigned n, double eps) {
  const QMatrix res_n = s_resolvent_pow(side, t, s, n, eps);
  const QMatrix t_n = mat_pow(t, n);
  const Quaternion s_n = qpow(s, n);
  return side == Side::left ? t_n * res_n.scaled_right(s_n)
                            : res_n.scaled_left(s_n) * t_n;
}

YosidaScanReport yosida_bound_scan(const QMatrix& t, const ScanGrid& grid,
                                   std::optional<double> c_target,
                                   double eps) {
  YosidaScanReport report;
  report.grid = grid;
  report.c_target = c_target ? *c_target
                             : power_norms(t, 200, eps).p_n;

  report.per_radius_worst.assign(grid.radii.size(), 0.0);
  for (std::size_t ri = 0; ri < grid.radii.size(); ++ri) {
    const double r = grid.radii[ri];
    for (std::size_t ai = 0; ai < grid.angles.size(); ++ai) {
      for (std::size_t xi = 0; xi < grid.axes.size(); ++xi) {
        const Quaternion s = grid.point(ri, ai, xi);
        for (Side side : {Side::left, Side::right}) {
          for (int n = 1; n <= grid.n_max; ++n) {
            const double value =
                std::pow(1.0 - 1.0 / r, n) *
                op_norm(yosida_pow(side, t, s, static_cast<unsigned>(n), eps));
            YosidaScanEntry e{r, grid.angles[ai], xi, side, n, value};
            report.entries.push_back(e);
            report.per_radius_worst[ri] =
                std::max(report.per_radius_worst[ri], value);
            if (value > report.worst_ratio) {
              report.worst_ratio = value;
              report.witness = e;
            }
          }
        }
      }
    }
  }

  if (report.worst_ratio <= report.c_target) {
    report.verdict = ScanVerdict::satisfies;
  } else {
    bool adjacent = false;
    for (std::size_t ri = 0; ri + 1 < grid.radii.size(); ++ri)
      if (report.per_radius_worst[ri] > report.c_target &&
          report.per_radius_worst[ri + 1] > report.c_target)
        adjacent = true;
    report.verdict = adjacent ? ScanVerdict::violates
                              : ScanVerdict::inconclusive;
  }
  return report;
}

YosidaResidual yosida_limit_residual(const QMatrix& t, const Quaternion& s,
                                     double eps) {
  const double t_norm = op_norm(t);
  const double s_mod = s.norm();
  if (!(s_mod > t_norm))
    throw Error(Errc::domain_error, "residual bound requires |s| > ||T||");
  YosidaResidual out;
  out.residual = op_norm(yosida(Side::left, t, s, eps) - t);
  out.bound = t_norm * t_norm / (s_mod - t_norm);
  return out;
}

}  // namespace qspectra
