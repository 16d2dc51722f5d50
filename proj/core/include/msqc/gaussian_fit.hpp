#pragma once

#include "msqc/radial_profile.hpp"

namespace msqc {

/// Result of fitting A exp(-r^2/(2 s^2)) + c to a radial profile.
struct GaussianFit {
  double amplitude = 0.0;     ///< A, profile units
  double width = 0.0;         ///< s, m
  double offset = 0.0;        ///< c, profile units
  double rms_residual = 0.0;  ///< count-weighted RMS of model - data
  int iterations = 0;
  bool converged = false;
};

/// Count-weighted least squares via Levenberg-Marquardt from a moment-based
/// initial guess. Converged when the relative parameter change drops below
/// 1e-10, capped at 200 iterations; on non-convergence the best-so-far
/// parameters are returned with converged = false. Profiles whose dynamic
/// range is below 1e-6 of the peak are degenerate and reported the same way.
/// Requires >= 4 nonempty bins (std::invalid_argument otherwise).
GaussianFit fit_gaussian(const RadialProfile& profile);

}  // namespace msqc
