#include "msqc/werner.hpp"

#include <cmath>
#include <stdexcept>

#include "msqc/discord.hpp"
#include "msqc/metrics.hpp"
#include "msqc/spin_state.hpp"

namespace msqc {

DensityMatrix4 werner_state(double z) {
  if (!(z >= 0.0 && z <= 1.0)) {
    throw std::domain_error("werner_state: purity must be in [0, 1]");
  }
  const Vec4 phi = bell_state().amps;
  Mat4 rho = z * (phi * phi.adjoint());
  rho += (1.0 - z) / 4.0 * Mat4::Identity();
  DensityMatrix4 out(rho);
  out.validate();
  return out;
}

double purity_decay(double gamma, double t) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw std::domain_error("purity_decay: rate must be positive");
  }
  if (!(t >= 0.0)) throw std::domain_error("purity_decay: negative time");
  return std::exp(-gamma * t);
}

double discord_vanishing_time(double gamma, double threshold) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw std::domain_error("discord_vanishing_time: rate must be positive");
  }
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw std::domain_error("discord_vanishing_time: threshold outside (0, 1]");
  }
  if (threshold == 1.0) return 0.0;
  return -std::log(threshold) / gamma;
}

std::vector<DecayPoint> discord_decay_series(double gamma, double t_max,
                                             int steps, int discord_grid) {
  if (!(t_max > 0.0)) throw std::domain_error("decay series: t_max must be > 0");
  if (steps < 2) throw std::domain_error("decay series: needs >= 2 steps");

  std::vector<DecayPoint> series;
  series.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    DecayPoint point;
    point.t = t_max * i / (steps - 1);
    point.z = purity_decay(gamma, point.t);
    const DensityMatrix4 rho = werner_state(point.z);
    point.discord_bits = quantum_discord(rho, discord_grid);
    point.concurrence = concurrence_mixed(rho);
    series.push_back(point);
  }
  return series;
}

}  // namespace msqc
