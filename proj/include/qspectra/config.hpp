#pragma once

namespace qspectra {

// Library-wide default tolerance. All equality and invertibility decisions
// are relative tests against this value unless a caller overrides it.
inline constexpr double kEpsilon = 1e-10;

// Default tolerance for contour-quadrature self-checks.
inline constexpr double kQuadTolerance = 1e-8;

}  // namespace qspectra
