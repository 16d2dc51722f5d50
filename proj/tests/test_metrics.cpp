#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "msqc/discord.hpp"
#include "msqc/evolution.hpp"
#include "msqc/metrics.hpp"
#include "msqc/werner.hpp"
#include "support/oracles.hpp"

using namespace msqc;
constexpr double kPi = std::numbers::pi;

TEST_CASE("concurrence_pure: Bell, product, and partially entangled states") {
  CHECK(concurrence_pure(bell_state()) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(concurrence_pure(basis_state(kPM)) == 0.0);

  // gt = pi/8 evolves |+-> into cos|+-> - i sin|-+>: C = |sin(2gt)| = sin(pi/4).
  const SpinState partial = evolve_analytic(
      basis_state(kPM), SystemParams::resonant(0.0, 1.0), kPi / 8.0);
  CHECK(concurrence_pure(partial) ==
        doctest::Approx(std::sin(kPi / 4.0)).epsilon(1e-14));

  SpinState bad;
  bad.amps << 0.9, 0.1, 0.0, 0.0;
  CHECK_THROWS_AS(concurrence_pure(bad), std::invalid_argument);
}

TEST_CASE("concurrence trajectory equals |sin(2gt)|") {
  const double g = 0.9;
  for (int i = 0; i <= 100; ++i) {
    const double t = kPi * i / 100.0 / g;
    const SpinState psi =
        evolve_analytic(basis_state(kPM), SystemParams::resonant(1.3, g), t);
    CHECK(std::abs(concurrence_pure(psi) - std::abs(std::sin(2.0 * g * t))) <
          1e-10);
  }
}

TEST_CASE("concurrence_mixed: pure projectors and the maximally mixed state") {
  CHECK(concurrence_mixed(pure_density(bell_state())) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(concurrence_mixed(DensityMatrix4(Mat4::Identity() * 0.25)) == 0.0);
}

TEST_CASE("concurrence_mixed: Werner family against the closed form") {
  // Oracle check first: the spin-flip eigenvalues of the Werner family give
  // C = max(0, (3z - 1)/2); z = 0.9519 -> 0.92785.
  CHECK(oracles::werner_concurrence(0.9519) ==
        doctest::Approx(0.92785).epsilon(1e-10));
  for (double z : {0.0, 0.1, 1.0 / 3.0, 0.34, 0.5, 0.75, 0.9519, 1.0}) {
    CHECK(std::abs(concurrence_mixed(werner_state(z)) -
                   oracles::werner_concurrence(z)) < 1e-9);
  }
}

TEST_CASE("concurrence_mixed: agrees with concurrence_pure on random states") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const SpinState psi{oracles::random_pure_state(rng)};
    CHECK(std::abs(concurrence_mixed(pure_density(psi)) -
                   concurrence_pure(psi)) < 1e-10);
  }
}

TEST_CASE("concurrence_mixed: rejects non-PSD input") {
  Mat4 bad = Mat4::Identity() * 0.25;
  bad(0, 0) = 0.75;
  bad(3, 3) = -0.25;
  CHECK_THROWS_AS(concurrence_mixed(DensityMatrix4(bad)), std::invalid_argument);
}

TEST_CASE("von_neumann_entropy: pure, mixed, Werner") {
  CHECK(von_neumann_entropy(pure_density(bell_state()).rho) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(von_neumann_entropy(Mat4(Mat4::Identity() * 0.25)) ==
        doctest::Approx(2.0).epsilon(1e-12));

  // Spectrum {0.625, 0.125 x3} at z = 0.5.
  const double expected = oracles::entropy_bits(oracles::werner_spectrum(0.5));
  CHECK(expected == doctest::Approx(1.5488).epsilon(1e-4));
  CHECK(von_neumann_entropy(werner_state(0.5).rho) ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("mutual_information: Bell, product, Werner") {
  CHECK(mutual_information(pure_density(bell_state())) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(mutual_information(pure_density(basis_state(kPM))) ==
        doctest::Approx(0.0).epsilon(1e-12));

  const double z = 1.0 / 3.0;
  const double expected =
      2.0 - oracles::entropy_bits(oracles::werner_spectrum(z));
  CHECK(expected == doctest::Approx(0.2075).epsilon(1e-3));
  CHECK(mutual_information(werner_state(z)) ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("measurement projectors: completeness and idempotence") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> theta(0.0, kPi);
  std::uniform_real_distribution<double> phi(0.0, 2.0 * kPi);
  for (int trial = 0; trial < 50; ++trial) {
    const MeasurementBasis basis{theta(rng), phi(rng)};
    const auto [plus, minus] = measurement_projectors(basis);
    CHECK((plus + minus - Mat2::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((plus * plus - plus).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((minus * minus - minus).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((plus * minus).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("conditional entropy: product, Bell, and pure-Werner cases") {
  // Product state: measuring photon 2 tells nothing about photon 1.
  const DensityMatrix4 product = pure_density(basis_state(kPM));
  for (const MeasurementBasis& basis :
       {MeasurementBasis{0.3, 1.0}, MeasurementBasis{2.0, 4.0}}) {
    CHECK(conditional_entropy_after_measurement(product, basis) ==
          doctest::Approx(0.0).epsilon(1e-12));
  }

  // Mixed product: the answer is S(rho_A) > 0, again basis-independent.
  Mat4 mixed_product = Mat4::Zero();
  const double pa[2] = {0.7, 0.3}, pb[2] = {0.6, 0.4};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) mixed_product(2 * i + j, 2 * i + j) = pa[i] * pb[j];
  const double s_a = oracles::binary_entropy_bits(0.7);
  for (const MeasurementBasis& basis :
       {MeasurementBasis{0.0, 0.0}, MeasurementBasis{1.3, 2.1},
        MeasurementBasis{2.9, 5.5}}) {
    CHECK(conditional_entropy_after_measurement(DensityMatrix4(mixed_product),
                                                basis) ==
          doctest::Approx(s_a).epsilon(1e-12));
  }

  // Maximally entangled: every basis gives perfect correlation.
  const DensityMatrix4 bell = pure_density(bell_state());
  for (const MeasurementBasis& basis :
       {MeasurementBasis{0.0, 0.0}, MeasurementBasis{kPi / 2.0, 0.7},
        MeasurementBasis{1.1, 5.2}}) {
    CHECK(conditional_entropy_after_measurement(bell, basis) ==
          doctest::Approx(0.0).epsilon(1e-12));
  }

  CHECK(conditional_entropy_after_measurement(werner_state(1.0),
                                              MeasurementBasis{0.0, 0.0}) ==
        doctest::Approx(0.0).epsilon(1e-12));

  // A correlated-but-not-pure case against the binary-entropy closed form.
  const double z = 0.6;
  CHECK(conditional_entropy_after_measurement(werner_state(z),
                                              MeasurementBasis{1.2, 0.4}) ==
        doctest::Approx(oracles::binary_entropy_bits((1.0 + z) / 2.0))
            .epsilon(1e-12));
}

TEST_CASE("quantum_discord: Werner endpoints") {
  CHECK(std::abs(quantum_discord(werner_state(1.0)) - 1.0) < 1e-6);
  CHECK(std::abs(quantum_discord(werner_state(0.0))) < 1e-9);
  CHECK_THROWS_AS(quantum_discord(werner_state(0.5), 16), std::domain_error);
}

TEST_CASE("quantum_discord: Werner family against closed form and brute force") {
  for (double z : {0.2, 0.5, 0.8}) {
    const double ours = quantum_discord(werner_state(z));
    CHECK(std::abs(ours - oracles::werner_discord_bits(z)) < 1e-8);
    // Brute force at reduced resolution here; the acceptance suite runs 512.
    CHECK(std::abs(ours - oracles::brute_force_discord_bits(
                              werner_state(z).rho, 96)) < 1e-6);
  }
}

TEST_CASE("quantum_discord: brute-force agreement off the Werner family") {
  // Anisotropic states exercise the measurement optimization for real; the
  // Werner family alone cannot (every basis is equivalent there).
  std::mt19937_64 rng(2718);
  for (double weight : {0.35, 0.7}) {
    const SpinState psi{oracles::random_pure_state(rng)};
    const Mat4 rho =
        weight * pure_density(psi).rho + (1.0 - weight) * Mat4::Identity() * 0.25;
    const DensityMatrix4 dm(rho);
    const double brute = oracles::brute_force_discord_bits(rho, 128, 1e-9);
    CHECK(std::abs(quantum_discord(dm) - brute) < 1e-6);
  }
}

TEST_CASE("quantum_discord: monotone on the Werner family") {
  double previous = -1.0;
  for (int i = 0; i <= 50; ++i) {
    const double d = quantum_discord(werner_state(i / 50.0));
    CHECK(d >= previous - 1e-8);
    previous = d;
  }
}

TEST_CASE("quantum_discord: positive where concurrence vanishes") {
  for (double z : {0.05, 0.15, 0.25, 1.0 / 3.0}) {
    CHECK(concurrence_mixed(werner_state(z)) == 0.0);
    CHECK(quantum_discord(werner_state(z)) > 1e-4);
  }
}

TEST_CASE("discord and concurrence: local unitary invariance") {
  std::mt19937_64 rng(303);
  for (double z : {0.3, 0.7}) {
    const DensityMatrix4 rho = werner_state(z);
    const double d0 = quantum_discord(rho);
    const double c0 = concurrence_mixed(rho);
    for (int trial = 0; trial < 5; ++trial) {
      const Mat4 u = oracles::kron2(oracles::random_unitary2(rng),
                                    oracles::random_unitary2(rng));
      const DensityMatrix4 rotated(u * rho.rho * u.adjoint());
      CHECK(std::abs(quantum_discord(rotated) - d0) < 1e-8);
      CHECK(std::abs(concurrence_mixed(rotated) - c0) < 1e-8);
    }
  }
}

TEST_CASE("quantum_discord: bounded by mutual information") {
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> mix(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    // Random pure state mixed with white noise: valid and generically
    // non-Werner.
    const SpinState psi{oracles::random_pure_state(rng)};
    const double w = mix(rng);
    const Mat4 rho =
        w * pure_density(psi).rho + (1.0 - w) * Mat4::Identity() * 0.25;
    const DensityMatrix4 dm(rho);
    const double d = quantum_discord(dm);
    CHECK(d >= 0.0);
    CHECK(d <= mutual_information(dm) + 1e-8);
  }
}

TEST_CASE("ppt_min_eigenvalue: Werner boundary and endpoints") {
  CHECK(std::abs(ppt_min_eigenvalue(werner_state(1.0 / 3.0))) < 1e-10);
  // Partial-transpose spectrum of a Bell projector is {-1/2, 1/2, 1/2, 1/2}.
  CHECK(ppt_min_eigenvalue(werner_state(1.0)) ==
        doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(ppt_min_eigenvalue(DensityMatrix4(Mat4::Identity() * 0.25)) ==
        doctest::Approx(0.25).epsilon(1e-12));

  // Sign flip happens exactly at the separability boundary.
  CHECK(ppt_min_eigenvalue(werner_state(1.0 / 3.0 - 1e-9)) > 0.0);
  CHECK(ppt_min_eigenvalue(werner_state(1.0 / 3.0 + 1e-9)) < 0.0);
  for (double z : {0.1, 0.45, 0.99}) {
    CHECK(std::abs(ppt_min_eigenvalue(werner_state(z)) -
                   oracles::werner_ppt_min(z)) < 1e-10);
  }
}

TEST_CASE("werner concurrence: zero below the boundary, increasing above") {
  double previous = 0.0;
  for (int i = 0; i <= 60; ++i) {
    const double z = i / 60.0;
    const double c = concurrence_mixed(werner_state(z));
    if (z <= 1.0 / 3.0) {
      CHECK(c == 0.0);
    } else {
      CHECK(c > previous);
    }
    previous = c;
  }
}

TEST_CASE("entropies and mutual information are nonnegative") {
  std::mt19937_64 rng(505);
  std::uniform_real_distribution<double> mix(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const SpinState psi{oracles::random_pure_state(rng)};
    const double w = mix(rng);
    const DensityMatrix4 rho(
        Mat4(w * pure_density(psi).rho + (1.0 - w) * Mat4::Identity() * 0.25));
    CHECK(von_neumann_entropy(rho.rho) >= 0.0);
    CHECK(mutual_information(rho) >= -1e-10);
  }
}
