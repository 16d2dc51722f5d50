#pragma once

#include <utility>

#include "msqc/density_matrix.hpp"

namespace msqc {

/// Rank-1 projective measurement direction on the Bloch sphere.
/// The projectors P+- = (I +- n.sigma)/2 with n = (sin t cos p, sin t sin p, cos t)
/// always sum to identity and are idempotent.
struct MeasurementBasis {
  double theta = 0.0;  ///< polar angle, [0, pi]
  double phi = 0.0;    ///< azimuthal angle, [0, 2pi)
};

/// The pair {P+, P-} for the given direction.
std::pair<Mat2, Mat2> measurement_projectors(const MeasurementBasis& basis);

/// Average post-measurement entropy of photon 1 after a projective
/// measurement of photon 2: sum_pm p_pm * S(rho_A | pm), bits. Outcomes
/// with probability below 1e-14 contribute zero.
double conditional_entropy_after_measurement(const DensityMatrix4& rho,
                                             const MeasurementBasis& basis);

/// Quantum discord [Ollivier & Zurek, PRL 88, 017901 (2001)], measuring
/// photon 2 and conditioning photon 1:
///   D = I(rho) - max_basis [ S(rho_A) - sum p_pm S(rho_A|pm) ]
/// The maximization runs an exhaustive (theta, phi) grid of `grid` x `grid`
/// points followed by Nelder-Mead refinement to step 1e-10. Values in
/// [-1e-8, 0) clamp to 0. Requires grid >= 32.
double quantum_discord(const DensityMatrix4& rho, int grid = 64);

}  // namespace msqc
