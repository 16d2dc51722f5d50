#pragma once

#include <cstddef>
#include <vector>

#include "msqc/power_map.hpp"

namespace msqc {

/// One annulus of a radially binned statistic.
struct RadialBin {
  double r_center = 0.0;  ///< m
  double mean = 0.0;
  double std = 0.0;       ///< population standard deviation
  std::size_t count = 0;
};

/// Radially averaged profile; bins ascend in r and empty bins are omitted.
struct RadialProfile {
  std::vector<RadialBin> bins;

  std::size_t total_count() const;
  double peak_mean() const;  ///< max bin mean (0 when empty)
};

/// Bins samples by r = hypot(x - cx, y - cy) into annuli of `bin_width`;
/// per-bin mean and population std. Throws std::domain_error for
/// bin_width <= 0.
RadialProfile radial_average(const PowerMap& map, double center_x,
                             double center_y, double bin_width);

/// Normalization choice for the coupling profile.
struct GNormalization {
  /// Peak-unit: max bin -> 1. Physical: max bin -> g_peak (rad/s).
  enum class Mode { kPeakUnit, kPhysical } mode = Mode::kPeakUnit;
  double g_peak = 0.0;

  static GNormalization peak_unit() { return {Mode::kPeakUnit, 0.0}; }
  static GNormalization physical(double g_peak) {
    return {Mode::kPhysical, g_peak};
  }
};

/// Converts a power profile into a coupling profile, g = scale * sqrt(mean),
/// since the coupling follows the field amplitude: g ~ sqrt(I) ~ sqrt(P).
/// Per-bin std propagates through the same scaling (delta method).
/// Requires all bin means >= 0 and at least one > 0.
RadialProfile g_profile(const RadialProfile& power, const GNormalization& norm);

}  // namespace msqc
