#include <CLI11.hpp>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "qspectra/fcalc.hpp"
#include "qspectra/fixtures.hpp"
#include "qspectra/io.hpp"
#include "qspectra/powan.hpp"
#include "qspectra/sspectrum.hpp"
#include "qspectra/yosida.hpp"

namespace {

using namespace qspectra;
using io::json;

struct CommonOpts {
  std::string input;
  std::string out = "-";
  std::string format = "json";
  double tol = kEpsilon;
};

void emit(const std::string& out_path, const std::string& content) {
  if (out_path == "-")
    std::cout << content;
  else
    io::write_text_file(out_path, content);
}

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_input = true) {
  auto* in = cmd->add_option("--input", o.input, "matrix JSON file");
  if (needs_input) in->required();
  cmd->add_option("--out", o.out, "output path ('-' for stdout)");
  cmd->add_option("--format", o.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--tol", o.tol, "library epsilon override");
}

ScanGrid grid_from_options(const std::vector<double>& radii, int angles,
                           const std::vector<std::string>& axes, int n_max) {
  ScanGrid g = ScanGrid::defaults();
  if (!radii.empty()) g.radii = radii;
  if (angles > 0) {
    g.angles.clear();
    for (int k = 0; k < angles; ++k)
      g.angles.push_back(-std::numbers::pi +
                         2.0 * std::numbers::pi * k / angles);
  }
  if (!axes.empty()) {
    g.axes.clear();
    for (const auto& a : axes) g.axes.push_back(io::parse_axis(a));
  }
  if (n_max > 0) g.n_max = n_max;
  return g;
}

int run(int argc, char** argv) {
  CLI::App app{"qspectra: S-spectrum diagnostics for quaternion matrices"};
  app.require_subcommand(1);

  // --- spectrum ---------------------------------------------------------
  CommonOpts spec_o;
  bool spec_grid = false;
  double spec_extent = 0.0;
  int spec_grid_n = 41;
  auto* c_spec = app.add_subcommand("spectrum", "S-spectrum sphere set");
  add_common(c_spec, spec_o);
  c_spec->add_flag("--grid", spec_grid,
                   "emit a CSV membership scan over a slice grid instead");
  c_spec->add_option("--grid-extent", spec_extent,
                     "half-width of the scan square (default: auto)");
  c_spec->add_option("--grid-n", spec_grid_n, "grid points per dimension");

  // --- resolvent --------------------------------------------------------
  CommonOpts res_o;
  std::string res_point;
  std::string res_side = "left";
  int res_n = 1;
  bool res_pseudo = false;
  auto* c_res = app.add_subcommand("resolvent", "S-resolvent at a point");
  add_common(c_res, res_o);
  c_res->add_option("--point", res_point, "quaternion s as w,x,y,z")->required();
  c_res->add_option("--side", res_side)->check(CLI::IsMember({"left", "right"}));
  c_res->add_option("--n", res_n, "resolvent power");
  c_res->add_flag("--pseudo", res_pseudo, "emit the pseudo-resolvent instead");

  // --- yosida -----------------------------------------------------------
  CommonOpts yos_o;
  std::string yos_point;
  std::string yos_side = "left";
  int yos_n = 1;
  std::vector<double> yos_radii;
  int yos_angles = 0;
  std::vector<std::string> yos_axes;
  int yos_nmax = 0;
  double yos_ctarget = -1.0;
  auto* c_yos = app.add_subcommand(
      "yosida", "spherical Yosida approximation (scan or single point)");
  add_common(c_yos, yos_o);
  c_yos->add_option("--point", yos_point,
                    "evaluate Y^n at one s (w,x,y,z) instead of scanning");
  c_yos->add_option("--side", yos_side)->check(CLI::IsMember({"left", "right"}));
  c_yos->add_option("--n", yos_n, "Yosida power for --point mode");
  c_yos->add_option("--radii", yos_radii, "scan radii override");
  c_yos->add_option("--angles", yos_angles, "uniform angle count override");
  c_yos->add_option("--axes", yos_axes, "axes override, each as x,y,z");
  c_yos->add_option("--n-max", yos_nmax, "largest Yosida power in the scan");
  c_yos->add_option("--c-target", yos_ctarget,
                    "bound constant (default: p_200 of the input)");

  // --- calculus ---------------------------------------------------------
  CommonOpts cal_o;
  std::string cal_coeffs, cal_preset, cal_axis = "1,0,0", cal_side = "left";
  double cal_radius = 2.0;
  int cal_nodes = 1024;
  auto* c_cal = app.add_subcommand("calculus", "S-functional calculus f(T)");
  add_common(c_cal, cal_o);
  c_cal->add_option("--coeffs", cal_coeffs, "real coefficients a0,a1,...");
  c_cal->add_option("--preset", cal_preset, "identity | q-1 | exp-N");
  c_cal->add_option("--axis", cal_axis, "slice axis x,y,z");
  c_cal->add_option("--radius", cal_radius, "contour radius");
  c_cal->add_option("--nodes", cal_nodes, "quadrature nodes");
  c_cal->add_option("--side", cal_side)->check(CLI::IsMember({"left", "right"}));

  // --- powers -----------------------------------------------------------
  CommonOpts pow_o;
  int pow_nmax = 200;
  auto* c_pow = app.add_subcommand("powers", "power norms and classification");
  add_common(c_pow, pow_o);
  c_pow->add_option("--n-max", pow_nmax, "largest power");

  // --- kreiss -----------------------------------------------------------
  CommonOpts kr_o;
  std::vector<double> kr_radii;
  int kr_angles = 0;
  std::vector<std::string> kr_axes;
  auto* c_kr = app.add_subcommand("kreiss", "Kreiss constant estimate");
  add_common(c_kr, kr_o);
  c_kr->add_option("--radii", kr_radii, "scan radii override");
  c_kr->add_option("--angles", kr_angles, "uniform angle count override");
  c_kr->add_option("--axes", kr_axes, "axes override, each as x,y,z");

  // --- kt ----------------------------------------------------------------
  CommonOpts kt_o;
  int kt_nmax = 200;
  double kt_tol = 1e-6;
  auto* c_kt = app.add_subcommand("kt", "Katznelson-Tzafriri difference scan");
  add_common(c_kt, kt_o);
  c_kt->add_option("--n-max", kt_nmax, "sequence length");
  c_kt->add_option("--kt-tol", kt_tol, "convergence threshold for d_N");

  // --- ritt ---------------------------------------------------------------
  CommonOpts rt_o;
  double rt_alpha = 1.0;
  auto* c_rt = app.add_subcommand("ritt", "Ritt-type sufficient condition scan");
  add_common(c_rt, rt_o);
  c_rt->add_option("--alpha", rt_alpha, "exponent in (0, 1]");

  // --- gelfand -------------------------------------------------------------
  CommonOpts gf_o;
  int gf_nmax = 200;
  double gf_bound = 1.01;
  auto* c_gf = app.add_subcommand("gelfand", "doubly-power-bounded rigidity probe");
  add_common(c_gf, gf_o);
  c_gf->add_option("--n-max", gf_nmax, "power range |n| <= N");
  c_gf->add_option("--sup-bound", gf_bound, "numerical power-boundedness bound");

  // --- fixtures -------------------------------------------------------------
  CommonOpts fx_o;
  std::uint64_t fx_seed = 1;
  std::string fx_kind = "random";
  std::size_t fx_dim = 2;
  auto* c_fx = app.add_subcommand("fixtures", "deterministic test matrices");
  add_common(c_fx, fx_o, false);
  c_fx->add_option("--seed", fx_seed, "generator seed");
  c_fx->add_option("--kind", fx_kind, "random | jordan | diagonal | unitary-like");
  c_fx->add_option("--dim", fx_dim, "matrix dimension");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (c_spec->parsed()) {
    const QMatrix t = io::load_matrix(spec_o.input);
    if (spec_grid) {
      const SSpectrum spec = s_spectrum(t, spec_o.tol);
      const double extent = spec_extent > 0.0
                                ? spec_extent
                                : std::max(1.5, 1.5 * spec.max_modulus());
      std::ostringstream csv;
      csv << "re,im_modulus,axis,margin\n";
      const ScanGrid axes_only = ScanGrid::defaults();
      for (const auto& axis : axes_only.axes) {
        for (int iy = 0; iy < spec_grid_n; ++iy) {
          for (int ix = 0; ix < spec_grid_n; ++ix) {
            const double xv = -extent + 2.0 * extent * ix / (spec_grid_n - 1);
            const double yv = -extent + 2.0 * extent * iy / (spec_grid_n - 1);
            const Quaternion s = Quaternion(xv) + axis.value() * yv;
            const auto member = in_s_resolvent_set(t, s, spec_o.tol);
            csv << io::format_double(xv) << ","
                << io::format_double(std::abs(yv)) << ","
                << io::axis_label(axis) << ","
                << io::format_double(member.margin) << "\n";
          }
        }
      }
      emit(spec_o.out, csv.str());
    } else {
      emit(spec_o.out, io::to_json(s_spectrum(t, spec_o.tol)).dump(2) + "\n");
    }
    return 0;
  }

  if (c_res->parsed()) {
    const QMatrix t = io::load_matrix(res_o.input);
    const Quaternion s = io::parse_quaternion(res_point);
    QMatrix r(t.dim());
    if (res_pseudo) {
      r = pseudo_resolvent(t, s, res_o.tol);
    } else {
      const Side side = res_side == "left" ? Side::left : Side::right;
      r = res_n == 1 ? s_resolvent(side, t, s, res_o.tol)
                     : s_resolvent_pow(side, t, s,
                                       static_cast<unsigned>(res_n), res_o.tol);
    }
    emit(res_o.out, io::to_json(r).dump(2) + "\n");
    return 0;
  }

  if (c_yos->parsed()) {
    const QMatrix t = io::load_matrix(yos_o.input);
    if (!yos_point.empty()) {
      const Side side = yos_side == "left" ? Side::left : Side::right;
      const Quaternion s = io::parse_quaternion(yos_point);
      const QMatrix y =
          yos_n == 1 ? yosida(side, t, s, yos_o.tol)
                     : yosida_pow(side, t, s, static_cast<unsigned>(yos_n),
                                  yos_o.tol);
      emit(yos_o.out, io::to_json(y).dump(2) + "\n");
      return 0;
    }
    const ScanGrid grid =
        grid_from_options(yos_radii, yos_angles, yos_axes, yos_nmax);
    std::optional<double> c_target;
    if (yos_ctarget > 0.0) c_target = yos_ctarget;
    const YosidaScanReport rep = yosida_bound_scan(t, grid, c_target, yos_o.tol);
    emit(yos_o.out, yos_o.format == "csv"
                        ? io::yosida_csv(rep)
                        : io::to_json(rep).dump(2) + "\n");
    return 0;
  }

  if (c_cal->parsed()) {
    const QMatrix t = io::load_matrix(cal_o.input);
    if (cal_coeffs.empty() == cal_preset.empty())
      throw Error(Errc::parse_error, "give exactly one of --coeffs, --preset");
    const IntrinsicFunction f = IntrinsicFunction::parse(
        cal_coeffs.empty() ? cal_preset : cal_coeffs);
    ContourSpec c;
    c.axis = io::parse_axis(cal_axis);
    c.radius = cal_radius;
    c.nodes = cal_nodes;
    const Side side = cal_side == "left" ? Side::left : Side::right;
    emit(cal_o.out,
         io::to_json(functional_calculus(t, f, c, cal_o.tol, side)).dump(2) +
             "\n");
    return 0;
  }

  if (c_pow->parsed()) {
    const QMatrix t = io::load_matrix(pow_o.input);
    const PowerReport rep = power_norms(t, pow_nmax, pow_o.tol);
    emit(pow_o.out, pow_o.format == "csv"
                        ? io::sequence_csv(rep.norms, "norm", 0)
                        : io::to_json(rep).dump(2) + "\n");
    return 0;
  }

  if (c_kr->parsed()) {
    const QMatrix t = io::load_matrix(kr_o.input);
    const ScanGrid grid = grid_from_options(kr_radii, kr_angles, kr_axes, 0);
    const KreissReport rep = kreiss_scan(t, grid, kr_o.tol);
    emit(kr_o.out, kr_o.format == "csv" ? io::kreiss_csv(rep)
                                        : io::to_json(rep).dump(2) + "\n");
    return 0;
  }

  if (c_kt->parsed()) {
    const QMatrix t = io::load_matrix(kt_o.input);
    const KTReport rep = kt_scan(t, kt_nmax, kt_tol, kt_o.tol);
    emit(kt_o.out, kt_o.format == "csv"
                       ? io::sequence_csv(rep.d, "d", 1)
                       : io::to_json(rep).dump(2) + "\n");
    return 0;
  }

  if (c_rt->parsed()) {
    const QMatrix t = io::load_matrix(rt_o.input);
    const RittReport rep = ritt_scan(t, rt_alpha, rt_o.tol);
    emit(rt_o.out, rt_o.format == "csv" ? io::ritt_csv(rep)
                                        : io::to_json(rep).dump(2) + "\n");
    return 0;
  }

  if (c_gf->parsed()) {
    const QMatrix t = io::load_matrix(gf_o.input);
    const GelfandRigidityReport rep =
        gelfand_rigidity_check(t, gf_nmax, gf_bound, 1e-6, gf_o.tol);
    emit(gf_o.out, io::to_json(rep).dump(2) + "\n");
    return 0;
  }

  if (c_fx->parsed()) {
    const QMatrix t = make_fixture(parse_fixture_kind(fx_kind), fx_seed, fx_dim);
    emit(fx_o.out, io::to_json(t).dump(2) + "\n");
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const qspectra::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_class();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
