#pragma once

#include <stdexcept>
#include <string>

namespace qspectra {

enum class Errc {
  zero_divisor,
  dimension_mismatch,
  not_adjoint_shaped,
  singular,
  spectrum_point,
  divergent,
  domain_error,
  contour_through_spectrum,
  diverged_quadrature,
  out_of_radius,
  parse_error,
};

// Single exception type for the whole library. `name()` is the stable
// identifier emitted on stderr by the CLI; `exit_class()` groups errors into
// the CLI exit codes (1 = I/O and parsing, 2 = mathematical domain).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(name_of(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }
  const char* name() const noexcept { return name_of(code_); }

  int exit_class() const noexcept {
    return code_ == Errc::parse_error ? 1 : 2;
  }

  static const char* name_of(Errc code) noexcept {
    switch (code) {
      case Errc::zero_divisor: return "ZeroDivisor";
      case Errc::dimension_mismatch: return "DimensionMismatch";
      case Errc::not_adjoint_shaped: return "NotAdjointShaped";
      case Errc::singular: return "Singular";
      case Errc::spectrum_point: return "SpectrumPoint";
      case Errc::divergent: return "Divergent";
      case Errc::domain_error: return "DomainError";
      case Errc::contour_through_spectrum: return "ContourThroughSpectrum";
      case Errc::diverged_quadrature: return "DivergedQuadrature";
      case Errc::out_of_radius: return "OutOfRadius";
      case Errc::parse_error: return "ParseError";
    }
    return "UnknownError";
  }

 private:
  Errc code_;
};

}  // namespace qspectra
