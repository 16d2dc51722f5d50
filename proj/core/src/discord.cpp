#include "msqc/discord.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "msqc/metrics.hpp"

namespace msqc {

namespace {

constexpr double kPi = std::numbers::pi;

struct Bloch {
  double nx, ny, nz;
};

Bloch direction(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
          std::cos(theta)};
}

Mat2 projector(const Bloch& n, double sign) {
  Mat2 p;
  p(0, 0) = 0.5 * (1.0 + sign * n.nz);
  p(1, 1) = 0.5 * (1.0 - sign * n.nz);
  p(0, 1) = 0.5 * sign * Complex(n.nx, -n.ny);
  p(1, 0) = 0.5 * sign * Complex(n.nx, n.ny);
  return p;
}

double entropy2_bits(double a, double d, const Complex& offdiag) {
  // Closed-form spectrum of a 2x2 Hermitian [[a, b], [b*, d]].
  const double mean = 0.5 * (a + d);
  const double root = std::hypot(0.5 * (a - d), std::abs(offdiag));
  double s = 0.0;
  for (double l : {mean + root, mean - root}) {
    if (l > 0.0) s -= l * std::log2(l);
  }
  return s;
}

// sum_pm p_pm S(rho_A | pm) for measurement direction n on photon 2.
// rho_A|n entries: M[s1][s1'] = <s1 n| rho |s1' n>, probability Tr M.
double conditional_entropy_direction(const Mat4& rho, const Bloch& n) {
  double total = 0.0;
  for (double sign : {+1.0, -1.0}) {
    // Measurement ket on photon 2 from the projector column space.
    const Mat2 pi = projector(n, sign);
    Mat2 m = Mat2::Zero();
    for (int s1 = 0; s1 < 2; ++s1)
      for (int s1p = 0; s1p < 2; ++s1p)
        for (int s2 = 0; s2 < 2; ++s2)
          for (int s2p = 0; s2p < 2; ++s2p)
            m(s1, s1p) += pi(s2p, s2) * rho(2 * s1 + s2, 2 * s1p + s2p);
    const double p = m(0, 0).real() + m(1, 1).real();
    if (p < 1e-14) continue;
    total += p * entropy2_bits(m(0, 0).real() / p, m(1, 1).real() / p,
                               m(0, 1) / p);
  }
  return total;
}

// Nelder-Mead minimization of f over (theta, phi); deterministic.
template <typename F>
std::pair<std::array<double, 2>, double> nelder_mead(
    F&& f, std::array<double, 2> start, double step, double tol_step,
    int max_iter) {
  using Point = std::array<double, 2>;
  struct Vertex {
    Point x;
    double value;
  };
  std::array<Vertex, 3> simplex;
  simplex[0] = {start, f(start)};
  simplex[1] = {{start[0] + step, start[1]}, 0.0};
  simplex[2] = {{start[0], start[1] + step}, 0.0};
  simplex[1].value = f(simplex[1].x);
  simplex[2].value = f(simplex[2].x);

  auto size = [&] {
    double d = 0.0;
    for (int i = 1; i < 3; ++i) {
      d = std::max(d, std::hypot(simplex[i].x[0] - simplex[0].x[0],
                                 simplex[i].x[1] - simplex[0].x[1]));
    }
    return d;
  };

  for (int iter = 0; iter < max_iter; ++iter) {
    std::sort(simplex.begin(), simplex.end(),
              [](const Vertex& a, const Vertex& b) { return a.value < b.value; });
    if (size() < tol_step) break;

    const Point centroid{0.5 * (simplex[0].x[0] + simplex[1].x[0]),
                         0.5 * (simplex[0].x[1] + simplex[1].x[1])};
    auto blend = [&](double coef) {
      return Point{centroid[0] + coef * (centroid[0] - simplex[2].x[0]),
                   centroid[1] + coef * (centroid[1] - simplex[2].x[1])};
    };

    const Point reflected = blend(1.0);
    const double fr = f(reflected);
    if (fr < simplex[0].value) {
      const Point expanded = blend(2.0);
      const double fe = f(expanded);
      simplex[2] = fe < fr ? Vertex{expanded, fe} : Vertex{reflected, fr};
    } else if (fr < simplex[1].value) {
      simplex[2] = {reflected, fr};
    } else {
      const Point contracted = blend(-0.5);
      const double fc = f(contracted);
      if (fc < simplex[2].value) {
        simplex[2] = {contracted, fc};
      } else {
        for (int i = 1; i < 3; ++i) {
          simplex[i].x = {0.5 * (simplex[i].x[0] + simplex[0].x[0]),
                          0.5 * (simplex[i].x[1] + simplex[0].x[1])};
          simplex[i].value = f(simplex[i].x);
        }
      }
    }
  }
  std::sort(simplex.begin(), simplex.end(),
            [](const Vertex& a, const Vertex& b) { return a.value < b.value; });
  return {simplex[0].x, simplex[0].value};
}

}  // namespace

std::pair<Mat2, Mat2> measurement_projectors(const MeasurementBasis& basis) {
  const Bloch n = direction(basis.theta, basis.phi);
  return {projector(n, +1.0), projector(n, -1.0)};
}

double conditional_entropy_after_measurement(const DensityMatrix4& rho,
                                             const MeasurementBasis& basis) {
  rho.validate();
  return conditional_entropy_direction(rho.rho, direction(basis.theta, basis.phi));
}

double quantum_discord(const DensityMatrix4& rho, int grid) {
  if (grid < 32) throw std::domain_error("discord: grid must be >= 32");
  rho.validate();

  const double info = mutual_information(rho);
  const double s_a = von_neumann_entropy(partial_trace_photon2(rho.rho));

  auto cond = [&rho](const std::array<double, 2>& angles) {
    return conditional_entropy_direction(rho.rho,
                                         direction(angles[0], angles[1]));
  };

  // Coarse exhaustive scan over cell centers, keeping the best few cells.
  struct Cell {
    double value;
    std::array<double, 2> angles;
  };
  std::vector<Cell> best;
  for (int i = 0; i < grid; ++i) {
    const double theta = kPi * (i + 0.5) / grid;
    for (int j = 0; j < grid; ++j) {
      const double phi = 2.0 * kPi * j / grid;
      const double value = cond({theta, phi});
      best.push_back({value, {theta, phi}});
      std::sort(best.begin(), best.end(),
                [](const Cell& a, const Cell& b) { return a.value < b.value; });
      if (best.size() > 4) best.pop_back();
    }
  }

  // Refine each candidate cell; the landscape is smooth, the multi-start
  // guards against a shallow local minimum at the coarse resolution.
  double min_cond = best.front().value;
  const double step = 0.5 * kPi / grid;
  for (const Cell& cell : best) {
    const auto [angles, value] =
        nelder_mead(cond, cell.angles, step, 1e-10, 400);
    min_cond = std::min(min_cond, value);
  }

  const double classical = s_a - min_cond;
  double discord = info - classical;
  if (discord < 0.0 && discord >= -1e-8) discord = 0.0;
  return discord;
}

}  // namespace msqc
