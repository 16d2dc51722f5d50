#include "msqc/coupling_report.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace msqc {

ConcurrenceStats concurrence_statistics(const RadialProfile& g,
                                        double aperture_r) {
  if (!(aperture_r > 0.0)) {
    throw std::domain_error("concurrence_statistics: aperture must be positive");
  }
  double g_peak = 0.0;
  for (const auto& b : g.bins) {
    if (b.mean < 0.0) {
      throw std::domain_error("concurrence_statistics: negative coupling");
    }
    g_peak = std::max(g_peak, b.mean);
  }
  if (!(g_peak > 0.0)) {
    throw std::domain_error("concurrence_statistics: zero coupling profile");
  }

  ConcurrenceStats stats;
  stats.g_peak = g_peak;
  stats.bell_time = std::numbers::pi / (4.0 * g_peak);

  // Weight each bin by its share of transmitted power: count * g^2.
  double wsum = 0.0, mean = 0.0, m2 = 0.0;
  for (const auto& b : g.bins) {
    if (b.r_center > aperture_r) continue;
    const double c = std::abs(std::sin(2.0 * b.mean * stats.bell_time));
    const double w = static_cast<double>(b.count) * b.mean * b.mean;
    wsum += w;
    mean += w * c;
    m2 += w * c * c;
    ++stats.bins_used;
  }
  if (stats.bins_used == 0 || !(wsum > 0.0)) {
    throw std::domain_error("concurrence_statistics: empty aperture");
  }
  stats.mean = mean / wsum;
  stats.std = std::sqrt(std::max(0.0, m2 / wsum - stats.mean * stats.mean));
  return stats;
}

std::vector<MaterialMetrics> compare_materials(
    const std::vector<std::pair<std::string, RadialProfile>>& profiles) {
  if (profiles.size() < 2) {
    throw std::invalid_argument("compare_materials: needs >= 2 profiles");
  }

  std::vector<MaterialMetrics> metrics;
  metrics.reserve(profiles.size());
  for (const auto& [name, profile] : profiles) {
    MaterialMetrics m;
    m.name = name;
    m.peak_g = profile.peak_mean();
    const GaussianFit fit = fit_gaussian(profile);
    m.fit_width = fit.width;
    m.fit_rms = fit.rms_residual;
    m.fit_converged = fit.converged;
    metrics.push_back(m);
  }

  auto rank_with = [&metrics](auto better) {
    std::vector<std::size_t> order(metrics.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), better);
    return order;
  };

  const auto by_peak = rank_with([&metrics](std::size_t i, std::size_t j) {
    if (metrics[i].peak_g != metrics[j].peak_g) {
      return metrics[i].peak_g > metrics[j].peak_g;
    }
    return metrics[i].name < metrics[j].name;
  });
  const auto by_residual = rank_with([&metrics](std::size_t i, std::size_t j) {
    if (metrics[i].fit_rms != metrics[j].fit_rms) {
      return metrics[i].fit_rms < metrics[j].fit_rms;
    }
    return metrics[i].name < metrics[j].name;
  });
  for (std::size_t pos = 0; pos < metrics.size(); ++pos) {
    metrics[by_peak[pos]].rank_by_peak = static_cast<int>(pos + 1);
    metrics[by_residual[pos]].rank_by_residual = static_cast<int>(pos + 1);
  }
  return metrics;
}

}  // namespace msqc
