#include "msqc/spin_state.hpp"

#include <cmath>
#include <stdexcept>

namespace msqc {

void SpinState::validate(double tol) const {
  for (int i = 0; i < 4; ++i) {
    if (!std::isfinite(amps[i].real()) || !std::isfinite(amps[i].imag())) {
      throw std::invalid_argument("spin state: non-finite amplitude at index " +
                                  std::to_string(i));
    }
  }
  const double n = norm();
  if (std::abs(n - 1.0) > tol) {
    throw std::invalid_argument("spin state: norm " + std::to_string(n) +
                                " deviates from 1 beyond tolerance");
  }
}

SpinState basis_state(BasisIndex i) {
  SpinState s;
  s.amps[static_cast<int>(i)] = Complex(1.0, 0.0);
  return s;
}

SpinState bell_state() {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return SpinState(Complex(0.0, 0.0), Complex(inv_sqrt2, 0.0),
                   Complex(0.0, -inv_sqrt2), Complex(0.0, 0.0));
}

std::array<double, 4> measurement_probabilities(const SpinState& state) {
  state.validate();
  std::array<double, 4> p{};
  for (int i = 0; i < 4; ++i) p[i] = std::norm(state.amps[i]);
  return p;
}

double bell_fidelity(const SpinState& state, const SpinState& target) {
  state.validate();
  target.validate();
  return std::norm(target.amps.dot(state.amps));
}

}  // namespace msqc
