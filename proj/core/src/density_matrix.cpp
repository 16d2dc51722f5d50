#include "msqc/density_matrix.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace msqc {

void DensityMatrix4::validate(double herm_tol, double trace_tol,
                              double psd_floor) const {
  if (!rho.allFinite()) {
    throw std::invalid_argument("density matrix: non-finite entries");
  }
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > herm_tol) {
    throw std::invalid_argument("density matrix: not Hermitian");
  }
  if (std::abs(rho.trace().real() - 1.0) > trace_tol ||
      std::abs(rho.trace().imag()) > trace_tol) {
    throw std::invalid_argument("density matrix: trace != 1");
  }
  Eigen::SelfAdjointEigenSolver<Mat4> solver(rho);
  if (solver.eigenvalues().minCoeff() < -psd_floor) {
    throw std::invalid_argument("density matrix: negative eigenvalue");
  }
}

DensityMatrix4 pure_density(const SpinState& psi) {
  psi.validate();
  return DensityMatrix4(psi.amps * psi.amps.adjoint());
}

// Composite index = 2*s1 + s2 with s1, s2 in {0 = +, 1 = -}.

Mat2 partial_trace_photon2(const Mat4& rho) {
  Mat2 out = Mat2::Zero();
  for (int s1 = 0; s1 < 2; ++s1)
    for (int s1p = 0; s1p < 2; ++s1p)
      for (int s2 = 0; s2 < 2; ++s2)
        out(s1, s1p) += rho(2 * s1 + s2, 2 * s1p + s2);
  return out;
}

Mat2 partial_trace_photon1(const Mat4& rho) {
  Mat2 out = Mat2::Zero();
  for (int s2 = 0; s2 < 2; ++s2)
    for (int s2p = 0; s2p < 2; ++s2p)
      for (int s1 = 0; s1 < 2; ++s1)
        out(s2, s2p) += rho(2 * s1 + s2, 2 * s1 + s2p);
  return out;
}

Mat4 partial_transpose_photon2(const Mat4& rho) {
  Mat4 out;
  for (int s1 = 0; s1 < 2; ++s1)
    for (int s1p = 0; s1p < 2; ++s1p)
      for (int s2 = 0; s2 < 2; ++s2)
        for (int s2p = 0; s2p < 2; ++s2p)
          out(2 * s1 + s2, 2 * s1p + s2p) = rho(2 * s1 + s2p, 2 * s1p + s2);
  return out;
}

}  // namespace msqc
