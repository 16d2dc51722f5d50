#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace msqc {

/// One detector reading: position (m) and nonnegative transmitted power
/// (arbitrary linear units).
struct PowerSample {
  double x = 0.0;
  double y = 0.0;
  double p = 0.0;
};

/// A 2D transmitted-power map plus grid metadata. Loaded from CSV or built
/// synthetically; analysis code treats it as an immutable sample cloud.
struct PowerMap {
  std::vector<PowerSample> samples;
  double extent_x = 0.0;  ///< max|x| over samples, m
  double extent_y = 0.0;  ///< max|y| over samples, m
  std::optional<std::uint64_t> seed;  ///< set for synthetic fixtures

  std::size_t size() const { return samples.size(); }
  double total_power() const;
};

/// Parses the power-map CSV contract: header `x,y,p`, '#' comment lines,
/// coordinates in meters, power >= 0. Malformed or negative rows raise
/// std::runtime_error naming the offending line.
PowerMap load_power_map(const std::string& path);

/// Same contract, from an in-memory string (used by tests and fixtures).
PowerMap parse_power_map_csv(const std::string& text,
                             const std::string& origin = "<string>");

/// Writes the CSV contract; metadata (sample count, extent, seed) goes into
/// leading '#' comments.
void write_power_map_csv(const PowerMap& map, const std::string& path);

/// Parameters of a synthetic Gaussian power map on a regular grid:
///   p(x,y) = amplitude * exp(-r^2/(2 width^2)) + offset, r from (cx, cy),
/// plus optional uniform multiplicative noise of relative amplitude
/// `noise` drawn from the seeded generator.
struct SyntheticMapSpec {
  int grid = 64;            ///< grid points per axis
  double extent = 1e-5;     ///< half-width of the square domain, m
  double amplitude = 1.0;
  double width = 2e-6;      ///< Gaussian sigma, m
  double offset = 0.0;
  double center_x = 0.0;
  double center_y = 0.0;
  double noise = 0.0;       ///< relative, e.g. 0.01 for 1%
  std::uint64_t seed = 1;
};

/// Deterministic synthetic fixture; the seed is recorded in the map.
PowerMap synthetic_gaussian_map(const SyntheticMapSpec& spec);

/// Power-weighted mean position. Throws std::domain_error when the total
/// power is zero.
std::pair<double, double> centroid(const PowerMap& map);

}  // namespace msqc
