#pragma once

#include <optional>
#include <vector>

#include "qspectra/config.hpp"
#include "qspectra/qmatrix.hpp"
#include "qspectra/sspectrum.hpp"

namespace qspectra {

// Grid of sample points s = r e^{I theta} shared by the Yosida, Kreiss and
// Ritt scans. Angles are in radians; the default grid is 16 uniform angles
// on [-pi, pi) (so theta = 0 is included), radii {1.05, 1.1, 1.25, 1.5, 2, 4}
// and axes {i, j, (i+j+k)/sqrt(3)}.
struct ScanGrid {
  std::vector<double> radii;
  std::vector<double> angles;
  std::vector<UnitImaginary> axes;
  int n_max = 12;

  static ScanGrid defaults();
  // Refined toward s = 1: radii 1 + 2^{-k}, angles clustered near 0.
  static ScanGrid ritt_defaults();

  Quaternion point(std::size_t radius_idx, std::size_t angle_idx,
                   std::size_t axis_idx) const;
};

// Spherical Yosida approximations
//   Y_L(s,T) = S_L^{-1}(s,T) s^2 - s I,   Y_R(s,T) = s^2 S_R^{-1}(s,T) - s I,
// with Y_L also equal to T S_L^{-1}(s,T) s.
QMatrix yosida(Side side, const QMatrix& t, const Quaternion& s,
               double eps = kEpsilon);

// Y^n via the closed-form resolvent powers:
//   Y_L^n = T^n S_L^{-n}(s,T) s^n,   Y_R^n = s^n S_R^{-n}(s,T) T^n.
QMatrix yosida_pow(Side side, const QMatrix& t, const Quaternion& s,
                   unsigned n, double eps = kEpsilon);

struct YosidaScanEntry {
  double radius = 0.0;
  double angle = 0.0;
  std::size_t axis_idx = 0;
  Side side = Side::left;
  int n = 1;
  double value = 0.0;  // (1 - 1/|s|)^n * ||Y^n(s,T)||
};

enum class ScanVerdict { satisfies, violates, inconclusive };

struct YosidaScanReport {
  ScanGrid grid;
  double c_target = 1.0;
  std::vector<YosidaScanEntry> entries;
  double worst_ratio = 0.0;
  YosidaScanEntry witness;
  // Max of the tabulated values per radius (radii order as in grid).
  std::vector<double> per_radius_worst;
  ScanVerdict verdict = ScanVerdict::satisfies;
};

// Tabulates (1 - 1/|s|)^n ||Y^n(s,T)|| for both sides over the grid. A
// "violates" verdict requires the bound to be exceeded at two adjacent radii
// so that a single near-spectrum artifact cannot flip the result. When
// c_target is not given, p_200(T) from the power scan is used.
YosidaScanReport yosida_bound_scan(const QMatrix& t, const ScanGrid& grid,
                                   std::optional<double> c_target = {},
                                   double eps = kEpsilon);

struct YosidaResidual {
  double residual = 0.0;  // ||Y_L(s,T) - T||
  double bound = 0.0;     // ||T||^2 / (|s| - ||T||)
};

// Requires |s| > ||T||; throws DomainError otherwise.
YosidaResidual yosida_limit_residual(const QMatrix& t, const Quaternion& s,
                                     double eps = kEpsilon);

}  // namespace qspectra
