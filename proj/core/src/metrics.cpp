#include "msqc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace msqc {

namespace {

// sigma_y (x) sigma_y: the two-qubit spin-flip matrix, real antidiagonal.
Mat4 spin_flip() {
  Mat4 f = Mat4::Zero();
  f(0, 3) = -1.0;
  f(1, 2) = 1.0;
  f(2, 1) = 1.0;
  f(3, 0) = -1.0;
  return f;
}

template <typename Vector>
double entropy_bits(const Vector& spectrum) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
    double l = spectrum[i];
    if (l < 0.0) {
      if (l < -1e-10) {
        throw std::invalid_argument("entropy: spectrum not PSD");
      }
      l = 0.0;  // numeric PSD drift
    }
    if (l > 0.0) s -= l * std::log2(l);
  }
  return s;
}

}  // namespace

double concurrence_pure(const SpinState& state) {
  state.validate();
  const Complex a = state.amps[kPP], b = state.amps[kPM];
  const Complex c = state.amps[kMP], d = state.amps[kMM];
  return 2.0 * std::abs(a * d - b * c);
}

double concurrence_mixed(const DensityMatrix4& rho) {
  rho.validate();

  // Subnormalized-eigenvector form: with W = [sqrt(nu_i) v_i], the Wootters
  // lambdas are the singular values of the complex-symmetric K = W^T F W.
  // (Equivalent to sqrt-eigenvalues of rho * rho~, but does not square away
  // half the floating-point digits on rank-deficient inputs.)
  Eigen::SelfAdjointEigenSolver<Mat4> solver(rho.rho);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("concurrence: eigensolver failed");
  }
  const double floor = 1e-14 * solver.eigenvalues().maxCoeff();
  Mat4 w = Mat4::Zero();
  for (int i = 0; i < 4; ++i) {
    const double nu = solver.eigenvalues()[i];
    if (nu > floor) w.col(i) = std::sqrt(nu) * solver.eigenvectors().col(i);
  }

  const Mat4 k = w.transpose() * spin_flip() * w;
  Eigen::JacobiSVD<Mat4> svd(k);
  const auto& lambda = svd.singularValues();  // descending
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

double von_neumann_entropy(const Mat4& rho) {
  Eigen::SelfAdjointEigenSolver<Mat4> solver(rho);
  return entropy_bits(solver.eigenvalues());
}

double von_neumann_entropy(const Mat2& rho) {
  Eigen::SelfAdjointEigenSolver<Mat2> solver(rho);
  return entropy_bits(solver.eigenvalues());
}

double mutual_information(const DensityMatrix4& rho) {
  rho.validate();
  const double s_a = von_neumann_entropy(partial_trace_photon2(rho.rho));
  const double s_b = von_neumann_entropy(partial_trace_photon1(rho.rho));
  return s_a + s_b - von_neumann_entropy(rho.rho);
}

double ppt_min_eigenvalue(const DensityMatrix4& rho) {
  rho.validate();
  Eigen::SelfAdjointEigenSolver<Mat4> solver(partial_transpose_photon2(rho.rho));
  return solver.eigenvalues().minCoeff();
}

}  // namespace msqc
