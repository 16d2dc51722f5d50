#include "msqc/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>

namespace msqc {

void SystemParams::validate() const {
  if (!std::isfinite(omega0) || !std::isfinite(omega1) || !std::isfinite(g) ||
      !std::isfinite(hbar_scale)) {
    throw std::domain_error("system params: non-finite value");
  }
  if (omega0 < 0.0 || omega1 < 0.0) {
    throw std::domain_error("system params: negative frequency");
  }
  if (g < 0.0) throw std::domain_error("system params: negative coupling");
  if (hbar_scale <= 0.0) {
    throw std::domain_error("system params: hbar_scale must be positive");
  }
}

void Hamiltonian4::validate(double tol) const {
  if (!matrix.allFinite() || !std::isfinite(hbar_scale) || hbar_scale <= 0.0) {
    throw std::invalid_argument("hamiltonian: non-finite entries");
  }
  const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff());
  if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > tol * scale) {
    throw std::invalid_argument("hamiltonian: not Hermitian");
  }
  // Everything off-diagonal except the (1,2)/(2,1) exchange must vanish.
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      if ((i == 1 && j == 2) || (i == 2 && j == 1)) continue;
      if (std::abs(matrix(i, j)) > tol * scale) {
        throw std::invalid_argument(
            "hamiltonian: coupling outside the |+-> <-> |-+> block");
      }
    }
  }
  // The exchange coupling hg is real in this model.
  if (std::abs(matrix(1, 2).imag()) > tol * scale) {
    throw std::invalid_argument("hamiltonian: exchange coupling must be real");
  }
}

Hamiltonian4 build_hamiltonian(const SystemParams& params) {
  params.validate();
  const double h = params.hbar_scale;
  Hamiltonian4 H;
  H.hbar_scale = h;
  H.matrix.setZero();
  H.matrix(0, 0) = h * (params.omega0 + params.omega1);
  H.matrix(1, 1) = h * params.omega0;
  H.matrix(2, 2) = h * params.omega1;
  H.matrix(3, 3) = h * (params.omega0 + params.omega1);
  H.matrix(1, 2) = h * params.g;
  H.matrix(2, 1) = h * params.g;
  return H;
}

EigenSystem eigensystem(const Hamiltonian4& H) {
  H.validate();
  EigenSystem out;

  // |++> and |--> decouple; their energies are the corner diagonals.
  out.eigenvalues[0] = H.matrix(0, 0).real();
  out.eigenvalues[3] = H.matrix(3, 3).real();
  out.eigenvectors[0] = basis_state(kPP).amps;
  out.eigenvectors[3] = basis_state(kMM).amps;

  const double a = H.matrix(1, 1).real();
  const double b = H.matrix(2, 2).real();
  const double g = H.matrix(1, 2).real();
  const double mean = 0.5 * (a + b);
  const double delta = 0.5 * (a - b);
  const double root = std::hypot(delta, g);

  out.eigenvalues[1] = mean + root;
  out.eigenvalues[2] = mean - root;

  if (g == 0.0) {
    // Degenerate or already-diagonal block: standard basis, larger energy first.
    const bool pm_first = a >= b;
    out.eigenvectors[1] = basis_state(pm_first ? kPM : kMP).amps;
    out.eigenvectors[2] = basis_state(pm_first ? kMP : kPM).amps;
  } else {
    const double theta = 0.5 * std::atan2(2.0 * g, a - b);
    Vec4 plus = Vec4::Zero(), minus = Vec4::Zero();
    plus[kPM] = std::cos(theta);
    plus[kMP] = std::sin(theta);
    minus[kPM] = std::sin(theta);
    minus[kMP] = -std::cos(theta);
    out.eigenvectors[1] = plus;
    out.eigenvectors[2] = minus;
  }
  return out;
}

}  // namespace msqc
