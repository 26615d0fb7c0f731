#pragma once

#include <string>
#include <vector>

#include "qspectra/config.hpp"
#include "qspectra/qmatrix.hpp"
#include "qspectra/sspectrum.hpp"
#include "qspectra/yosida.hpp"

namespace qspectra {

enum class PowerClass { bounded, unbounded, marginal };

const char* to_string(PowerClass c);

// Norms of the powers T^0..T^N by repeated multiplication (n = 0 included,
// so p_n >= 1 and the Kreiss/Yosida bounds hold verbatim for contractions).
struct PowerReport {
  std::vector<double> norms;  // norms[n] = ||T^n||, n = 0..N
  double p_n = 0.0;           // max over the table
  double r_s = 0.0;
  PowerClass classification = PowerClass::marginal;
  double tail_slope = 0.0;    // mean increment of ||T^n|| over the last quartile
  std::string evidence;
};

PowerReport power_norms(const QMatrix& t, int n, double eps = kEpsilon);

struct KreissEntry {
  double radius = 0.0;
  double angle = 0.0;
  std::size_t axis_idx = 0;
  double value = 0.0;  // (|s| - 1) ||S_L^{-1}(s,T)||
};

struct KreissReport {
  ScanGrid grid;
  std::vector<KreissEntry> entries;
  double c_est = 0.0;
  KreissEntry witness;
};

// Estimates the Kreiss constant sup (|s|-1) ||S_L^{-1}(s,T)|| over the grid.
// Never produces a boundedness verdict: whether the Kreiss condition implies
// power-boundedness is open in the quaternionic setting.
KreissReport kreiss_scan(const QMatrix& t, const ScanGrid& grid,
                         double eps = kEpsilon);

enum class KTVerdict { converges, stagnates, undetermined, inconsistent,
                       not_applicable };

const char* to_string(KTVerdict v);

struct KTReport {
  std::vector<double> d;          // d[n-1] = ||T^n - T^{n+1}||, n = 1..N
  SSpectrum peripheral;
  std::vector<double> lower_bounds;  // per peripheral sphere: |s - 1|
  double lower_bound_max = 0.0;
  bool applicable = false;           // power_norms classified bounded
  bool spectral_predicts_convergence = false;  // peripheral spectrum within {1}
  KTVerdict verdict = KTVerdict::undetermined;
};

// Katznelson-Tzafriri scan: fills the difference sequence, the peripheral
// spectrum with its |s - 1| lower bounds, and cross-checks the numerical
// trend against the spectral prediction. Verdict rules:
//   converges:  d_N < tol and d_N <= d_{N/2}
//   stagnates:  min_{n > N/2} d_n > 10 tol
//   otherwise:  undetermined
// A trend contradicting the spectral side yields "inconsistent".
KTReport kt_scan(const QMatrix& t, int n, double tol = 1e-6,
                 double eps = kEpsilon);

struct RittEntry {
  double radius = 0.0;
  double angle = 0.0;
  std::size_t axis_idx = 0;
  double value = 0.0;  // |s - 1|^{1+alpha} ||S_L^{-2}(s,T)||
};

struct RittReport {
  double alpha = 1.0;
  ScanGrid grid;
  std::vector<RittEntry> entries;
  double c_est = 0.0;
  std::vector<double> per_radius_max;  // aligned with grid.radii
  bool gamma_in_one = false;   // peripheral S-spectrum within {1}
  bool table_diverges = false; // growth trend at the two finest radii
  bool hypothesis_met = false;
  bool conclusion_observed = false;  // power classification bounded
};

// Ritt-type sufficient condition scan with a grid refined toward s = 1.
// hypothesis_met = Gamma_S within {1} and no divergence of the table as the
// radius decreases; conclusion_observed comes from power_norms.
RittReport ritt_scan(const QMatrix& t, double alpha, const ScanGrid& grid,
                     double eps = kEpsilon);
RittReport ritt_scan(const QMatrix& t, double alpha, double eps = kEpsilon);

struct GelfandRigidityReport {
  double sup_norm = 0.0;  // sup_{|n| <= N} ||T^n||
  bool powers_bounded = false;    // sup_norm <= sup_bound
  bool spectrum_is_one = false;   // every sphere within spectrum_tol of (1,0)
  double dist_identity = 0.0;     // ||T - I||
  SSpectrum spectrum;
};

// Probe for the rigidity statement: doubly power-bounded + sigma_S = {1}
// forces T = I. Throws Singular when T is not invertible.
GelfandRigidityReport gelfand_rigidity_check(const QMatrix& t, int n,
                                             double sup_bound = 1.01,
                                             double spectrum_tol = 1e-6,
                                             double eps = kEpsilon);

}  // namespace qspectra
