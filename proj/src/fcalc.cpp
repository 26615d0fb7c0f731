#include "qspectra/fcalc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qspectra {

void ContourSpec::validate() const {
  if (!(radius > 0.0))
    throw Error(Errc::domain_error, "contour radius must be positive");
  if (nodes < 8 || nodes % 2 != 0)
    throw Error(Errc::domain_error, "contour nodes must be even and >= 8");
}

IntrinsicFunction IntrinsicFunction::identity() {
  return {{0.0, 1.0}, std::numeric_limits<double>::infinity(), "identity"};
}

IntrinsicFunction IntrinsicFunction::shift() {
  return {{-1.0, 1.0}, std::numeric_limits<double>::infinity(), "q-1"};
}

IntrinsicFunction IntrinsicFunction::exp_series(int terms) {
  IntrinsicFunction f;
  f.name = "exp-" + std::to_string(terms);
  f.coeffs.resize(static_cast<std::size_t>(std::max(terms, 1)));
  double c = 1.0;
  for (std::size_t m = 0; m < f.coeffs.size(); ++m) {
    f.coeffs[m] = c;
    c /= static_cast<double>(m + 1);
  }
  return f;
}

IntrinsicFunction IntrinsicFunction::monomial(unsigned m) {
  IntrinsicFunction f;
  f.name = "q^" + std::to_string(m);
  f.coeffs.assign(m + 1, 0.0);
  f.coeffs[m] = 1.0;
  return f;
}

IntrinsicFunction IntrinsicFunction::parse(const std::string& text) {
  if (text == "identity") return identity();
  if (text == "q-1") return shift();
  if (text.rfind("exp-", 0) == 0) {
    try {
      return exp_series(std::stoi(text.substr(4)));
    } catch (const std::exception&) {
      throw Error(Errc::parse_error, "bad exp preset: " + text);
    }
  }
  IntrinsicFunction f;
  f.name = text;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    try {
      f.coeffs.push_back(std::stod(text.substr(pos, comma - pos)));
    } catch (const std::exception&) {
      throw Error(Errc::parse_error, "bad coefficient list: " + text);
    }
    pos = comma + 1;
  }
  return f;
}

Quaternion intrinsic_eval(const IntrinsicFunction& f, const Quaternion& q) {
  if (q.norm() > f.radius)
    throw Error(Errc::out_of_radius, "|q| exceeds the convergence radius");
  Quaternion acc{};
  for (std::size_t m = f.coeffs.size(); m-- > 0;)
    acc = acc * q + Quaternion(f.coeffs[m]);
  return acc;
}

std::complex<double> intrinsic_eval(const IntrinsicFunction& f,
                                    std::complex<double> z) {
  if (std::abs(z) > f.radius)
    throw Error(Errc::out_of_radius, "|z| exceeds the convergence radius");
  std::complex<double> acc = 0.0;
  for (std::size_t m = f.coeffs.size(); m-- > 0;) acc = acc * z + f.coeffs[m];
  return acc;
}

namespace {

void check_contour_clears_spectrum(const QMatrix& t, const ContourSpec& c,
                                   double eps) {
  const SSpectrum spec = s_spectrum(t, eps);
  double min_dist = std::numeric_limits<double>::infinity();
  double r_s = 0.0;
  for (const auto& sphere : spec.spheres) {
    min_dist = std::min(min_dist, std::abs(sphere.modulus() - c.radius));
    r_s = std::max(r_s, sphere.modulus());
  }
  if (min_dist < eps)
    throw Error(Errc::contour_through_spectrum,
                "contour circle within epsilon of an S-spectrum sphere");
  if (!(c.radius > r_s))
    throw Error(Errc::domain_error,
                "contour radius must exceed the S-spectral radius");
}

// One trapezoidal pass. kernel(s) supplies the slice-plane scalar multiplied
// against the resolvent; the division by the node count realizes 1/(2 pi).
template <typename Kernel>
QMatrix quadrature_pass(Side side, const QMatrix& t, const ContourSpec& c,
                        int nodes, double eps, Kernel&& kernel) {
  QMatrix acc(t.dim());
  const Quaternion axis = c.axis.value();
  for (int k = 0; k < nodes; ++k) {
    const double theta =
        -std::numbers::pi + 2.0 * std::numbers::pi * k / nodes;
    const Quaternion s = Quaternion(c.radius * std::cos(theta)) +
                         axis * (c.radius * std::sin(theta));
    const Quaternion weight = s * kernel(s);  // ds_I collapses to s dtheta
    const QMatrix res = s_resolvent(side, t, s, eps);
    acc += side == Side::left ? res.scaled_right(weight)
                              : res.scaled_left(weight);
  }
  return acc * (1.0 / nodes);
}

template <typename Kernel>
QMatrix contour_integral(Side side, const QMatrix& t, const ContourSpec& c,
                         double eps, Kernel&& kernel) {
  c.validate();
  check_contour_clears_spectrum(t, c, eps);
  QMatrix result = quadrature_pass(side, t, c, c.nodes, eps, kernel);
  if (c.verify_convergence) {
    const QMatrix refined =
        quadrature_pass(side, t, c, 2 * c.nodes, eps, kernel);
    if (op_norm(result - refined) > 10.0 * c.tolerance)
      throw Error(Errc::diverged_quadrature,
                  "doubling the node count moved the result beyond tolerance");
  }
  return result;
}

}  // namespace

QMatrix contour_power(Side side, const QMatrix& t, unsigned n,
                      const ContourSpec& c, double eps) {
  return contour_integral(side, t, c, eps,
                          [n](const Quaternion& s) { return qpow(s, n); });
}

QMatrix functional_calculus(const QMatrix& t, const IntrinsicFunction& f,
                            const ContourSpec& c, double eps, Side side) {
  if (c.radius > f.radius)
    throw Error(Errc::out_of_radius,
                "contour radius exceeds the function's convergence radius");
  return contour_integral(side, t, c, eps, [&f](const Quaternion& s) {
    return intrinsic_eval(f, s);
  });
}

double hausdorff_distance(const SSpectrum& a, const SSpectrum& b) {
  if (a.spheres.empty() || b.spheres.empty())
    return a.spheres.empty() == b.spheres.empty()
               ? 0.0
               : std::numeric_limits<double>::infinity();
  double h = 0.0;
  auto one_sided = [&h](const SSpectrum& from, const SSpectrum& to) {
    for (const auto& p : from.spheres) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : to.spheres) best = std::min(best, half_plane_dist(p, q));
      h = std::max(h, best);
    }
  };
  one_sided(a, b);
  one_sided(b, a);
  return h;
}

SpectralMappingReport spectral_mapping_check(const QMatrix& t,
                                             const IntrinsicFunction& f,
                                             const ContourSpec& c,
                                             double eps) {
  SpectralMappingReport rep;
  rep.spectrum_of_ft = s_spectrum(functional_calculus(t, f, c, eps), eps);

  SSpectrum image;
  for (const auto& sphere : s_spectrum(t, eps).spheres) {
    const std::complex<double> z =
        intrinsic_eval(f, std::complex<double>(sphere.x, sphere.y));
    const SpectralSphere mapped{z.real(), std::abs(z.imag())};
    bool merged = false;
    for (auto& kept : image.spheres) {
      const double tol = eps * (1.0 + std::abs(kept.x) + kept.y);
      if (half_plane_dist(kept, mapped) <= tol) merged = true;
    }
    if (!merged) image.spheres.push_back(mapped);
  }
  std::sort(image.spheres.begin(), image.spheres.end(),
            [](const SpectralSphere& a, const SpectralSphere& b) {
              return a.x != b.x ? a.x < b.x : a.y < b.y;
            });
  rep.image_spectrum = image;
  rep.hausdorff = hausdorff_distance(rep.spectrum_of_ft, rep.image_spectrum);
  return rep;
}

}  // namespace qspectra
