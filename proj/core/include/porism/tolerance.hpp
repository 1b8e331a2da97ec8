#pragma once

#include <complex>
#include <numbers>

namespace porism {

using cplx = std::complex<double>;

/// Relative tolerance used by every operation that accepts a `tol` argument.
/// The command-line tool overrides it with `--tol`.
inline constexpr double kDefaultTolerance = 1e-11;

/// Threshold for deciding that a computed point lies on the unit circle.
inline constexpr double kOnCircleTolerance = 1e-7;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Principal argument mapped into [0, 2π).
inline double arg_0_2pi(cplx z) {
    double t = std::arg(z);
    if (t < 0.0) t += kTwoPi;
    if (t >= kTwoPi) t -= kTwoPi;
    return t;
}

inline cplx unit(double theta) { return std::polar(1.0, theta); }

}  // namespace porism
