#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace msqc {

using Complex = std::complex<double>;
using Vec4 = Eigen::Vector4cd;
using Mat4 = Eigen::Matrix4cd;
using Mat2 = Eigen::Matrix2cd;

/// Index into the ordered two-photon spin basis {|++>, |+->, |-+>, |-->}.
enum BasisIndex : int { kPP = 0, kPM = 1, kMP = 2, kMM = 3 };

/// Pure state of the two-photon spin system: four complex amplitudes over
/// the ordered basis {|++>, |+->, |-+>, |-->}. Physical states are
/// normalized; `validate` enforces finiteness and unit norm.
struct SpinState {
  Vec4 amps = Vec4::Zero();

  SpinState() = default;
  explicit SpinState(const Vec4& a) : amps(a) {}
  SpinState(Complex pp, Complex pm, Complex mp, Complex mm) {
    amps << pp, pm, mp, mm;
  }

  double norm() const { return amps.norm(); }

  /// Throws std::invalid_argument on non-finite amplitudes or when the norm
  /// deviates from 1 by more than `tol`.
  void validate(double tol = 1e-9) const;
};

/// Basis state |++>, |+->, |-+> or |-->.
SpinState basis_state(BasisIndex i);

/// The Bell state reached from |+-> at gt = pi/4: (|+-> - i|-+>)/sqrt(2).
SpinState bell_state();

/// p_i = |a_i|^2 for the four basis outcomes. Requires a normalized state.
std::array<double, 4> measurement_probabilities(const SpinState& state);

/// Overlap probability |<target|state>|^2; insensitive to the global phase
/// of either argument. Both states must be normalized.
double bell_fidelity(const SpinState& state, const SpinState& target);

}  // namespace msqc
