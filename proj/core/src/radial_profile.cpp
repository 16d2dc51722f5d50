#include "msqc/radial_profile.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace msqc {

std::size_t RadialProfile::total_count() const {
  std::size_t n = 0;
  for (const auto& b : bins) n += b.count;
  return n;
}

double RadialProfile::peak_mean() const {
  double peak = 0.0;
  for (const auto& b : bins) peak = std::max(peak, b.mean);
  return peak;
}

RadialProfile radial_average(const PowerMap& map, double center_x,
                             double center_y, double bin_width) {
  if (!(bin_width > 0.0) || !std::isfinite(bin_width)) {
    throw std::domain_error("radial_average: bin width must be positive");
  }

  struct Accum {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::size_t count = 0;
  };
  std::map<long, Accum> bins;
  for (const auto& s : map.samples) {
    const double r = std::hypot(s.x - center_x, s.y - center_y);
    auto& acc = bins[static_cast<long>(std::floor(r / bin_width))];
    acc.sum += s.p;
    acc.sum_sq += s.p * s.p;
    ++acc.count;
  }

  RadialProfile profile;
  profile.bins.reserve(bins.size());
  for (const auto& [index, acc] : bins) {
    RadialBin bin;
    bin.r_center = (index + 0.5) * bin_width;
    bin.count = acc.count;
    bin.mean = acc.sum / acc.count;
    const double var =
        std::max(0.0, acc.sum_sq / acc.count - bin.mean * bin.mean);
    bin.std = std::sqrt(var);
    profile.bins.push_back(bin);
  }
  return profile;
}

RadialProfile g_profile(const RadialProfile& power, const GNormalization& norm) {
  double peak = 0.0;
  for (const auto& b : power.bins) {
    if (b.mean < 0.0) {
      throw std::domain_error("g_profile: negative power mean");
    }
    peak = std::max(peak, b.mean);
  }
  if (!(peak > 0.0)) throw std::domain_error("g_profile: all-zero profile");

  double scale = 0.0;
  switch (norm.mode) {
    case GNormalization::Mode::kPeakUnit:
      scale = 1.0 / std::sqrt(peak);
      break;
    case GNormalization::Mode::kPhysical:
      if (!(norm.g_peak > 0.0)) {
        throw std::domain_error("g_profile: physical g_peak must be positive");
      }
      scale = norm.g_peak / std::sqrt(peak);
      break;
  }

  RadialProfile out;
  out.bins.reserve(power.bins.size());
  for (const auto& b : power.bins) {
    RadialBin gb = b;
    gb.mean = scale * std::sqrt(b.mean);
    // First-order error propagation through sqrt.
    gb.std = b.mean > 0.0 ? scale * b.std / (2.0 * std::sqrt(b.mean)) : 0.0;
    out.bins.push_back(gb);
  }
  return out;
}

}  // namespace msqc
