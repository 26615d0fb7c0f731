#pragma once

#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "qspectra/config.hpp"
#include "qspectra/qmatrix.hpp"
#include "qspectra/sspectrum.hpp"

namespace qspectra {

// Circular slice contour: the boundary of the disk of the given radius
// traversed in the slice plane of `axis`, discretized with `nodes` uniform
// angles. The trapezoidal rule on this periodic analytic integrand converges
// geometrically in the node count.
struct ContourSpec {
  UnitImaginary axis = UnitImaginary::i();
  double radius = 2.0;
  int nodes = 1024;
  // When set, the quadrature is re-run at twice the node count and a
  // discrepancy beyond 10x tolerance raises DivergedQuadrature.
  bool verify_convergence = true;
  double tolerance = kQuadTolerance;

  void validate() const;
};

// Power series with real coefficients: f(q) = sum_m coeffs[m] q^m. Real
// coefficients make f intrinsic (every slice maps into itself), which is the
// class the spectral mapping theorem speaks about.
struct IntrinsicFunction {
  std::vector<double> coeffs;
  double radius = std::numeric_limits<double>::infinity();
  std::string name = "custom";

  static IntrinsicFunction identity();
  static IntrinsicFunction shift();               // q - 1
  static IntrinsicFunction exp_series(int terms); // finite radius guard kept infinite
  static IntrinsicFunction monomial(unsigned m);
  // Parses "a0,a1,a2,..." or the presets "identity", "q-1", "exp-N".
  static IntrinsicFunction parse(const std::string& text);
};

// Horner evaluation; throws OutOfRadius when |q| exceeds the declared radius.
Quaternion intrinsic_eval(const IntrinsicFunction& f, const Quaternion& q);
std::complex<double> intrinsic_eval(const IntrinsicFunction& f,
                                    std::complex<double> z);

// T^n via the slice contour integral of the S-resolvent against s^n (left)
// or its mirrored right-sided form. Requires the contour to enclose the
// S-spectrum with margin; throws ContourThroughSpectrum otherwise.
QMatrix contour_power(Side side, const QMatrix& t, unsigned n,
                      const ContourSpec& c, double eps = kEpsilon);

// f(T) via the same quadrature with f(s) in place of s^n.
QMatrix functional_calculus(const QMatrix& t, const IntrinsicFunction& f,
                            const ContourSpec& c, double eps = kEpsilon,
                            Side side = Side::left);

struct SpectralMappingReport {
  SSpectrum spectrum_of_ft;   // sigma_S(f(T)) via the eigenvalue route
  SSpectrum image_spectrum;   // {f(s) : s in sigma_S(T)} as sphere descriptors
  double hausdorff = 0.0;     // half-plane Hausdorff distance between the two
};

SpectralMappingReport spectral_mapping_check(const QMatrix& t,
                                             const IntrinsicFunction& f,
                                             const ContourSpec& c,
                                             double eps = kEpsilon);

double hausdorff_distance(const SSpectrum& a, const SSpectrum& b);

}  // namespace qspectra
