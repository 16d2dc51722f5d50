#include "msqc/evolution.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace msqc {

namespace {

constexpr Complex kI{0.0, 1.0};

// Propagator of the central 2x2 block in angular-frequency units:
//   exp(-i t (wbar I + delta sz + g sx))
// written as phase * [cos(Ot) I - i sin(Ot)/O (delta sz + g sx)], O = hypot(delta, g).
void apply_central_block(Vec4& amps, double omega0, double omega1, double g,
                         double t) {
  const double wbar = 0.5 * (omega0 + omega1);
  const double delta = 0.5 * (omega0 - omega1);
  const double rabi = std::hypot(delta, g);
  const Complex phase = std::exp(-kI * (wbar * t));

  Complex u11, u12, u22;
  if (rabi == 0.0) {
    u11 = u22 = 1.0;
    u12 = 0.0;
  } else {
    const double c = std::cos(rabi * t);
    const double s = std::sin(rabi * t) / rabi;
    u11 = Complex(c, -delta * s);
    u22 = Complex(c, +delta * s);
    u12 = Complex(0.0, -g * s);
  }
  const Complex a1 = amps[kPM];
  const Complex a2 = amps[kMP];
  amps[kPM] = phase * (u11 * a1 + u12 * a2);
  amps[kMP] = phase * (u12 * a1 + u22 * a2);
}

}  // namespace

SpinState evolve_analytic(const SpinState& state0, const SystemParams& params,
                          double t) {
  state0.validate();
  params.validate();
  if (!std::isfinite(t)) throw std::domain_error("evolve: non-finite time");

  SpinState out = state0;
  const Complex corner_phase =
      std::exp(-kI * ((params.omega0 + params.omega1) * t));
  out.amps[kPP] *= corner_phase;
  out.amps[kMM] *= corner_phase;
  apply_central_block(out.amps, params.omega0, params.omega1, params.g, t);
  return out;
}

SpinState evolve_numeric(const SpinState& state0, const Hamiltonian4& H,
                         double t) {
  state0.validate();
  H.validate();
  if (!std::isfinite(t)) throw std::domain_error("evolve: non-finite time");

  // Generic dense path: spectral decomposition of H/hbar.
  const Mat4 generator = H.matrix / H.hbar_scale;
  Eigen::SelfAdjointEigenSolver<Mat4> solver(generator);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("evolve_numeric: eigensolver failed");
  }
  const auto& vals = solver.eigenvalues();
  const Mat4& vecs = solver.eigenvectors();

  Vec4 phases;
  for (int k = 0; k < 4; ++k) phases[k] = std::exp(-kI * (vals[k] * t));
  SpinState out;
  out.amps = vecs * phases.asDiagonal() * (vecs.adjoint() * state0.amps);
  return out;
}

double bell_time(double g) {
  if (!(g > 0.0) || !std::isfinite(g)) {
    throw std::domain_error("bell_time: coupling must be positive");
  }
  return std::numbers::pi / (4.0 * g);
}

}  // namespace msqc
