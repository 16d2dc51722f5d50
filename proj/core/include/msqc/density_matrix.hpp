#pragma once

#include "msqc/spin_state.hpp"

namespace msqc {

/// Two-photon density operator on the {|++>, |+->, |-+>, |-->} basis.
/// Valid instances are Hermitian, unit trace, and positive semidefinite up
/// to a small numeric floor.
struct DensityMatrix4 {
  Mat4 rho = Mat4::Identity() * 0.25;

  DensityMatrix4() = default;
  explicit DensityMatrix4(const Mat4& m) : rho(m) {}

  /// Hermitian within `herm_tol`, trace 1 within `trace_tol`, eigenvalues
  /// >= -psd_floor. Throws std::invalid_argument.
  void validate(double herm_tol = 1e-12, double trace_tol = 1e-12,
                double psd_floor = 1e-10) const;
};

/// |psi><psi| for a normalized pure state.
DensityMatrix4 pure_density(const SpinState& psi);

/// Reduced state of photon 1 (trace over photon 2).
Mat2 partial_trace_photon2(const Mat4& rho);

/// Reduced state of photon 2 (trace over photon 1).
Mat2 partial_trace_photon1(const Mat4& rho);

/// Partial transpose over photon 2 (the PPT-criterion transform).
Mat4 partial_transpose_photon2(const Mat4& rho);

}  // namespace msqc
