#pragma once

#include "msqc/density_matrix.hpp"
#include "msqc/spin_state.hpp"

namespace msqc {

/// Concurrence of a pure two-qubit state (a,b,c,d): C = 2|ad - bc|.
/// Requires a normalized state.
double concurrence_pure(const SpinState& state);

/// Wootters concurrence for mixed states [Wootters, PRL 80, 2245 (1998)]:
/// C = max(0, sqrt(u1) - sqrt(u2) - sqrt(u3) - sqrt(u4)) with u_i the
/// descending eigenvalues of rho * (sy x sy) * conj(rho) * (sy x sy).
/// Agrees with concurrence_pure on rank-1 inputs. Validates rho.
double concurrence_mixed(const DensityMatrix4& rho);

/// S(rho) = -sum_i l_i log2 l_i in bits, with 0 log 0 := 0. Eigenvalues in
/// [-1e-10, 0) are clamped to zero before the log.
double von_neumann_entropy(const Mat4& rho);
double von_neumann_entropy(const Mat2& rho);

/// Total correlations I = S(rho_A) + S(rho_B) - S(rho), bits.
double mutual_information(const DensityMatrix4& rho);

/// Minimum eigenvalue of the partial transpose over photon 2.
/// Negative iff entangled (two-qubit PPT criterion).
double ppt_min_eigenvalue(const DensityMatrix4& rho);

}  // namespace msqc
