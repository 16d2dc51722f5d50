#pragma once

#include <vector>

#include "msqc/density_matrix.hpp"

namespace msqc {

/// Werner mixture of the metasurface Bell state with white noise:
///   rho(z) = z |Phi><Phi| + (1-z)/4 * I4,  |Phi> = (|+-> - i|-+>)/sqrt(2)
/// Spectrum {(1+3z)/4, (1-z)/4 x3}; separable iff z <= 1/3.
/// Throws std::domain_error for z outside [0, 1].
DensityMatrix4 werner_state(double z);

/// Depolarizing-channel purity after time t: z(t) = exp(-gamma t).
/// Throws std::domain_error for gamma <= 0 or t < 0.
double purity_decay(double gamma, double t);

/// Time at which the purity crosses `threshold`: t* = -ln(threshold)/gamma.
/// The default threshold 1/3 is the two-qubit separability boundary, so the
/// default t* marks the entangled-to-separable transition (Werner discord
/// itself stays positive for any z > 0). Accepts threshold in (0, 1].
double discord_vanishing_time(double gamma, double threshold = 1.0 / 3.0);

/// One row of a decoherence time series.
struct DecayPoint {
  double t = 0.0;            ///< s
  double z = 1.0;            ///< purity exp(-gamma t)
  double discord_bits = 0.0;
  double concurrence = 0.0;
};

/// Uniform time grid over [0, t_max]: per point the Werner state at
/// z = exp(-gamma t), its quantum discord and Wootters concurrence.
/// Requires steps >= 2, t_max > 0. `discord_grid` feeds quantum_discord.
std::vector<DecayPoint> discord_decay_series(double gamma, double t_max,
                                             int steps, int discord_grid = 64);

}  // namespace msqc
