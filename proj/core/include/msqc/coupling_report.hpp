#pragma once

#include <string>
#include <vector>

#include "msqc/gaussian_fit.hpp"
#include "msqc/radial_profile.hpp"

namespace msqc {

/// Spatial concurrence statistics of a physical coupling profile.
/// The hold time is pinned to the profile peak, t = pi/(4 g_peak), so the
/// peak bin satisfies the Bell condition exactly; elsewhere
/// C(r) = |sin(2 g(r) t)|. Mean/std are power-weighted (weight = count * g^2,
/// the binned share of transmitted power). Convention emitted in reports.
struct ConcurrenceStats {
  double mean = 0.0;
  double std = 0.0;
  double g_peak = 0.0;     ///< rad/s
  double bell_time = 0.0;  ///< s
  std::size_t bins_used = 0;
};

/// Evaluates the statistics over bins with r <= aperture_r. The profile must
/// carry physical g values (rad/s, all >= 0, peak > 0); an empty aperture is
/// a std::domain_error.
ConcurrenceStats concurrence_statistics(const RadialProfile& g,
                                        double aperture_r);

/// Per-material summary used by the comparison report.
struct MaterialMetrics {
  std::string name;
  double peak_g = 0.0;
  double fit_width = 0.0;     ///< s of the material's own Gaussian fit, m
  double fit_rms = 0.0;       ///< residual against that fit
  bool fit_converged = false;
  int rank_by_peak = 0;       ///< 1 = highest peak
  int rank_by_residual = 0;   ///< 1 = closest to Gaussian
};

/// Fits each named profile, then ranks by peak coupling (descending) and by
/// Gaussian-fit residual (ascending); ties break by name order. Requires at
/// least two profiles.
std::vector<MaterialMetrics> compare_materials(
    const std::vector<std::pair<std::string, RadialProfile>>& profiles);

}  // namespace msqc
