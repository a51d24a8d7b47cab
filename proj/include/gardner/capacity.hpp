#pragma once

// Analytic storage capacity of the spherical perceptron.
//
// Uncorrelated patterns: alpha_c(kappa) = 1 / F(kappa), exact for kappa >= 0
// and a rigorous upper bound for kappa < 0 (F from integral.hpp).
//
// Correlated +-1 patterns with bias ma (P(+1) = (1+ma)/2): the capacity
// integral becomes a mixture over the two sign classes, minimized over the
// mean-shift parameter v,
//
//   F_cor(kappa) = min_v [ (1+ma)/2 F(a-) + (1-ma)/2 F(a+) ],
//   a-+ = (kappa -+ v ma) / sqrt(1 - ma^2),
//
// and alpha_c = 1 / F_cor is exact when kappa >= v_opt * ma, i.e. when the
// correlation-adjusted margin (kappa - v_opt ma)/sqrt(1-ma^2) is nonnegative.
// The objective is strictly convex in v for ma > 0, so the scan-plus-golden
// minimizer is reliable.

#include <cmath>
#include <optional>
#include <stdexcept>

#include "gardner/errors.hpp"
#include "gardner/integral.hpp"
#include "gardner/minimize.hpp"

namespace gardner {

struct CorrelationParams {
  double ma = 0.0;  // pattern bias, 0 <= ma < 1

  CorrelationParams() = default;
  explicit CorrelationParams(double bias) : ma(bias) {
    if (!(ma >= 0.0) || !(ma < 1.0))
      throw std::invalid_argument("CorrelationParams: ma must lie in [0, 1)");
  }

  double sigma() const { return std::sqrt(1.0 - ma * ma); }
};

enum class Exactness { Exact, UpperBoundOnly };

struct CapacityResult {
  double kappa = 0.0;
  double f_value = 0.0;
  double alpha_c = 0.0;
  Exactness exactness = Exactness::Exact;
  std::optional<double> v_opt;
  std::optional<double> kappa_adj;
};

inline CapacityResult alpha_c_uncorrelated(double kappa) {
  CapacityResult r;
  r.kappa = kappa;
  r.f_value = gardner_integral(kappa);
  r.alpha_c = 1.0 / r.f_value;
  r.exactness = (kappa >= 0.0) ? Exactness::Exact : Exactness::UpperBoundOnly;
  return r;
}

// Mixture objective before the minimization over v.
inline double correlated_objective(double kappa, double v, const CorrelationParams& params) {
  if (params.ma == 0.0) return gardner_integral(kappa);
  const double s = params.sigma();
  const double a_minus = (kappa - v * params.ma) / s;
  const double a_plus = (kappa + v * params.ma) / s;
  return 0.5 * (1.0 + params.ma) * gardner_integral(a_minus) +
         0.5 * (1.0 - params.ma) * gardner_integral(a_plus);
}

struct CorrelatedIntegral {
  double f_value;
  double v_opt;
};

// min_v of the mixture objective. At ma = 0 the objective does not depend on
// v; v_opt is then 0 by convention.
inline CorrelatedIntegral correlated_integral(double kappa, const CorrelationParams& params,
                                              const ScalarMinimizeSpec& spec = {}) {
  if (params.ma == 0.0) return {gardner_integral(kappa), 0.0};
  const auto min = minimize_scalar(
      [&](double v) { return correlated_objective(kappa, v, params); }, spec);
  return {min.value, min.x};
}

// Correlation-adjusted margin (kappa - v_opt ma) / sqrt(1 - ma^2).
inline double adjusted_margin(double kappa, const CorrelationParams& params,
                              const ScalarMinimizeSpec& spec = {}) {
  if (params.ma == 0.0) return kappa;
  const auto ci = correlated_integral(kappa, params, spec);
  return (kappa - ci.v_opt * params.ma) / params.sigma();
}

// kappa^(c): the root of kappa -> adjusted_margin(kappa), located by bisection
// on [-5, 5] (doubled while no sign change). Everything to its right is the
// exact-capacity regime.
inline double critical_margin(const CorrelationParams& params, double tol = 1e-8) {
  if (!(params.ma > 0.0))
    throw std::invalid_argument("critical_margin: requires 0 < ma < 1");
  if (!(tol > 0.0)) throw std::invalid_argument("critical_margin: tol must be > 0");

  double lo = -5.0, hi = 5.0;
  double flo = adjusted_margin(lo, params), fhi = adjusted_margin(hi, params);
  while (flo * fhi > 0.0) {
    if (hi - lo > 1024.0)
      throw NoSignChange("critical_margin: adjusted margin does not change sign");
    lo *= 2.0;
    hi *= 2.0;
    flo = adjusted_margin(lo, params);
    fhi = adjusted_margin(hi, params);
  }
  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    const double fm = adjusted_margin(mid, params);
    if (std::fabs(fm) <= tol) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return mid;
}

inline CapacityResult alpha_c_correlated(double kappa, const CorrelationParams& params,
                                         const ScalarMinimizeSpec& spec = {}) {
  if (params.ma == 0.0) {
    CapacityResult r = alpha_c_uncorrelated(kappa);
    r.v_opt = 0.0;
    r.kappa_adj = kappa;
    return r;
  }
  const auto ci = correlated_integral(kappa, params, spec);
  CapacityResult r;
  r.kappa = kappa;
  r.f_value = ci.f_value;
  r.alpha_c = 1.0 / ci.f_value;
  r.v_opt = ci.v_opt;
  r.kappa_adj = (kappa - ci.v_opt * params.ma) / params.sigma();
  r.exactness = (*r.kappa_adj >= 0.0) ? Exactness::Exact : Exactness::UpperBoundOnly;
  return r;
}

}  // namespace gardner
