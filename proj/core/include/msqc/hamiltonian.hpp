#pragma once

#include <array>

#include "msqc/spin_state.hpp"

namespace msqc {

/// Physical inputs of the coupled two-photon model. Angular frequencies and
/// the spin-photon coupling are in rad/s; the dynamics run in natural units
/// (hbar = 1), so `hbar_scale` only rescales reported energies.
struct SystemParams {
  double omega0 = 0.0;      ///< free angular frequency of photon 1, rad/s
  double omega1 = 0.0;      ///< free angular frequency of photon 2, rad/s
  double g = 0.0;           ///< spin-photon coupling strength, rad/s
  double hbar_scale = 1.0;  ///< energy display scale, dimensionless

  /// Both photons at the same frequency; the paper-style resonant case.
  static SystemParams resonant(double omega, double g) {
    return SystemParams{omega, omega, g, 1.0};
  }

  /// Throws std::domain_error when any field is non-finite or negative
  /// (hbar_scale must be strictly positive).
  void validate() const;
};

/// 4x4 Hamiltonian over the {|++>, |+->, |-+>, |-->} basis. The only
/// off-diagonal coupling allowed by the model sits between |+-> and |-+>:
///
///   H = diag(E, hw0, hw1, E) + hg on (1,2),(2,1),   E = h(w0+w1)
///
/// `matrix` holds energies (hbar_scale * rad/s); `hbar_scale` is carried so
/// evolution can recover angular frequencies.
struct Hamiltonian4 {
  Mat4 matrix = Mat4::Zero();
  double hbar_scale = 1.0;

  /// Hermiticity and the sparsity pattern above, to tolerance `tol` relative
  /// to the largest entry magnitude. Throws std::invalid_argument.
  void validate(double tol = 1e-14) const;
};

/// Assembles the total Hamiltonian (free + exchange coupling) from params.
Hamiltonian4 build_hamiltonian(const SystemParams& params);

/// Eigendecomposition in the paper's ordering:
///   [0] |++> with E = H00, [1] lambda_plus, [2] lambda_minus, [3] |--> with E = H33
/// where lambda_pm = mean(H11,H22) +/- sqrt(delta^2 + g^2), delta = (H11-H22)/2.
/// Eigenvectors are orthonormal; at g = 0 they are the standard basis.
struct EigenSystem {
  std::array<double, 4> eigenvalues{};  ///< energy units (hbar_scale * rad/s)
  std::array<Vec4, 4> eigenvectors{};
};

/// Analytic eigensystem exploiting the block structure. |++> and |--> are
/// exact eigenstates; the central 2x2 block is diagonalized in closed form.
/// On resonance this reduces to lambda = +/- hg with (|+-> +/- |-+>)/sqrt(2).
/// Throws std::invalid_argument if H violates the sparsity pattern.
EigenSystem eigensystem(const Hamiltonian4& H);

}  // namespace msqc
