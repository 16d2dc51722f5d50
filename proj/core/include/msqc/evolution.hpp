#pragma once

#include "msqc/hamiltonian.hpp"
#include "msqc/spin_state.hpp"

namespace msqc {

/// U(t)|state0> through the closed-form eigensystem of the blocked
/// Hamiltonian. The common phase exp(-i*wbar*t) is retained, not stripped.
/// Starting from |+-> on resonance:
///   |psi(t)> = e^{-i w t} [ cos(gt)|+-> - i sin(gt)|-+> ]
/// Throws when state0 is not normalized (tol 1e-9) or params are invalid.
SpinState evolve_analytic(const SpinState& state0, const SystemParams& params, double t);

/// U(t)|state0> = exp(-i H t / hbar)|state0> via a generic dense Hermitian
/// eigensolver. Numeric cross-check path for evolve_analytic; same phase
/// convention. Throws on unnormalized input or invalid H.
SpinState evolve_numeric(const SpinState& state0, const Hamiltonian4& H, double t);

/// First time the |+-> initial state reaches the maximally entangled Bell
/// state: t = pi / (4g). Throws std::domain_error for g <= 0.
double bell_time(double g);

}  // namespace msqc
