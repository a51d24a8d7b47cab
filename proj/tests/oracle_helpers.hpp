#pragma once

// Test-only independent oracles. These deliberately avoid the production code
// paths they are used to check: minima come from brute-force grids, margins
// from exhaustive angular search, integrals from the adaptive quadrature
// routine applied to the literally-stated integrands.

#include <Eigen/Dense>

#include <cmath>
#include <utility>

#include "gardner/capacity.hpp"
#include "gardner/normal.hpp"
#include "gardner/quadrature.hpp"

namespace oracle {

// Brute-force scan of the correlated objective over a v grid.
inline std::pair<double, double> correlated_scan(double kappa, double ma, double lo = -20.0,
                                                 double hi = 20.0, double step = 1e-4) {
  const gardner::CorrelationParams params(ma);
  double best_v = lo, best_f = gardner::correlated_objective(kappa, lo, params);
  const long count = static_cast<long>((hi - lo) / step);
  for (long i = 1; i <= count; ++i) {
    const double v = lo + i * step;
    const double f = gardner::correlated_objective(kappa, v, params);
    if (f < best_f) {
      best_f = f;
      best_v = v;
    }
  }
  return {best_f, best_v};
}

// Both integrals of the correlated objective evaluated exactly as stated:
// the a- term in its forward orientation, the a+ term in its reflected one.
inline double correlated_objective_by_quadrature(double kappa, double v, double ma) {
  const double s = std::sqrt(1.0 - ma * ma);
  const double am = (kappa - v * ma) / s;
  const double ap = (kappa + v * ma) / s;
  gardner::QuadratureSpec spec;
  spec.abs_tol = 1e-13;
  const double t1 = gardner::integrate_adaptive(
      [am](double g) {
        const double u = g + am;
        return u * u * gardner::std_normal_pdf(g);
      },
      -am, std::max(-am, 0.0) + 14.0, spec);
  const double t2 = gardner::integrate_adaptive(
      [ap](double g) {
        const double u = -g + ap;
        return u * u * gardner::std_normal_pdf(g);
      },
      std::min(ap, 0.0) - 14.0, ap, spec);
  return 0.5 * (1.0 + ma) * t1 + 0.5 * (1.0 - ma) * t2;
}

// Sphere optimum max_{||x||=1} min_i h_i' x for n = 2, by angular grid.
inline double angular_grid_margin(const Eigen::MatrixXd& rows, long points = 1000000) {
  double best = -std::numeric_limits<double>::infinity();
  const double two_pi = 2.0 * M_PI;
  for (long p = 0; p < points; ++p) {
    const double theta = two_pi * static_cast<double>(p) / points;
    const double c = std::cos(theta), s = std::sin(theta);
    double worst = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < rows.rows(); ++i)
      worst = std::min(worst, rows(i, 0) * c + rows(i, 1) * s);
    best = std::max(best, worst);
  }
  return best;
}

}  // namespace oracle
