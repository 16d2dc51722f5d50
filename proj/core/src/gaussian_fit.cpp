#include "msqc/gaussian_fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

namespace msqc {

namespace {

struct FitData {
  Eigen::VectorXd r;
  Eigen::VectorXd y;
  Eigen::VectorXd w;  // bin sample counts
};

double weighted_sse(const FitData& d, double a, double s, double c) {
  double sse = 0.0;
  for (Eigen::Index i = 0; i < d.r.size(); ++i) {
    const double model = a * std::exp(-d.r[i] * d.r[i] / (2.0 * s * s)) + c;
    const double e = model - d.y[i];
    sse += d.w[i] * e * e;
  }
  return sse;
}

// Moment-based starting point: offset from the outermost bin, width from
// the offset-subtracted second moment of a half-normal profile (E[r^2] = s^2).
void initial_guess(const FitData& d, double& a, double& s, double& c) {
  c = std::max(0.0, d.y.minCoeff());
  a = std::max(d.y.maxCoeff() - c, 1e-300);

  double num = 0.0, den = 0.0;
  for (Eigen::Index i = 0; i < d.r.size(); ++i) {
    const double weight = std::max(0.0, d.y[i] - c) * d.w[i];
    num += weight * d.r[i] * d.r[i];
    den += weight;
  }
  s = den > 0.0 ? std::sqrt(num / den) : d.r.maxCoeff();
  if (!(s > 0.0)) s = std::max(d.r.maxCoeff(), 1e-300);
}

}  // namespace

GaussianFit fit_gaussian(const RadialProfile& profile) {
  FitData d;
  const Eigen::Index n = static_cast<Eigen::Index>(profile.bins.size());
  if (n < 4) {
    throw std::invalid_argument("fit_gaussian: needs at least 4 bins");
  }
  d.r.resize(n);
  d.y.resize(n);
  d.w.resize(n);
  double total_weight = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const RadialBin& b = profile.bins[i];
    if (b.count == 0) throw std::invalid_argument("fit_gaussian: empty bin");
    d.r[i] = b.r_center;
    d.y[i] = b.mean;
    d.w[i] = static_cast<double>(b.count);
    total_weight += d.w[i];
  }

  GaussianFit fit;
  const double peak = d.y.maxCoeff();
  const double range = peak - d.y.minCoeff();
  const bool degenerate = !(range > 1e-6 * std::abs(peak));

  double a, s, c;
  initial_guess(d, a, s, c);
  if (degenerate) {
    // Flat profile: no width information; report the trivial parameters
    // instead of letting s run away.
    fit.amplitude = range;
    fit.width = s;
    fit.offset = d.y.mean();
    fit.rms_residual = std::sqrt(weighted_sse(d, 0.0, s, fit.offset) / total_weight);
    fit.converged = false;
    return fit;
  }

  // Levenberg-Marquardt on (A, s, c).
  double lambda = 1e-3;
  double sse = weighted_sse(d, a, s, c);
  int iter = 0;
  for (; iter < 200; ++iter) {
    Eigen::Matrix3d jtj = Eigen::Matrix3d::Zero();
    Eigen::Vector3d jte = Eigen::Vector3d::Zero();
    for (Eigen::Index i = 0; i < n; ++i) {
      const double r2 = d.r[i] * d.r[i];
      const double e_term = std::exp(-r2 / (2.0 * s * s));
      const double model = a * e_term + c;
      const double resid = model - d.y[i];
      Eigen::Vector3d grad(e_term, a * e_term * r2 / (s * s * s), 1.0);
      jtj.noalias() += d.w[i] * grad * grad.transpose();
      jte.noalias() += d.w[i] * resid * grad;
    }

    bool stepped = false;
    for (int attempt = 0; attempt < 16 && !stepped; ++attempt) {
      Eigen::Matrix3d damped = jtj;
      for (int k = 0; k < 3; ++k) {
        damped(k, k) += lambda * std::max(jtj(k, k), 1e-300);
      }
      const Eigen::Vector3d delta = damped.ldlt().solve(-jte);
      const double a_new = a + delta[0];
      const double s_new = std::abs(s + delta[1]);
      const double c_new = c + delta[2];
      if (!(s_new > 0.0) || !std::isfinite(a_new) || !std::isfinite(c_new)) {
        lambda *= 10.0;
        continue;
      }
      const double sse_new = weighted_sse(d, a_new, s_new, c_new);
      if (sse_new <= sse) {
        const double rel_change = std::max(
            {std::abs(a_new - a) / std::max(std::abs(a), 1e-300),
             std::abs(s_new - s) / std::max(std::abs(s), 1e-300),
             std::abs(c_new - c) / std::max({std::abs(c), std::abs(a), 1e-300})});
        a = a_new;
        s = s_new;
        c = c_new;
        sse = sse_new;
        lambda = std::max(lambda * 0.25, 1e-12);
        stepped = true;
        if (rel_change < 1e-10) {
          fit.converged = true;
        }
      } else {
        lambda *= 10.0;
      }
    }
    if (fit.converged || !stepped) {
      if (!stepped) fit.converged = true;  // no improving step exists
      ++iter;
      break;
    }
  }

  fit.amplitude = a;
  fit.width = s;
  fit.offset = c;
  fit.iterations = iter;
  fit.rms_residual = std::sqrt(sse / total_weight);
  return fit;
}

}  // namespace msqc
