#pragma once

// The capacity integral of the spherical perceptron: the second moment of
// max(g + kappa, 0) for g ~ N(0,1),
//
//   F(kappa) = (1/sqrt(2*pi)) * int_{-kappa}^{inf} (g + kappa)^2 e^{-g^2/2} dg
//            = (1 + kappa^2) Phi(kappa) + kappa phi(kappa).
//
// The closed form is the production path (O(1), used inside optimization
// loops). The quadrature evaluations below share nothing with it except the
// normal pdf, so each side serves as the other's oracle. F is strictly
// positive, strictly increasing and strictly convex (F'' = 2 Phi > 0).

#include <algorithm>
#include <cmath>

#include "gardner/normal.hpp"
#include "gardner/quadrature.hpp"

namespace gardner {

inline double gardner_integral(double kappa) {
  return (1.0 + kappa * kappa) * std_normal_cdf(kappa) + kappa * std_normal_pdf(kappa);
}

// Upper bound on int_{upper}^{inf} (g + kappa)^2 phi(g) dg, valid for
// upper >= max(1, -kappa). Exact tail is (1+k^2) Phi(-U) + (U+2k) phi(U);
// bounding Phi(-U) <= phi(U)/U collapses it to phi(U) (1 + (U+kappa)^2) / U.
inline double gardner_tail_bound(double upper, double kappa) {
  const double s = upper + kappa;
  return std_normal_pdf(upper) * (1.0 + s * s) / upper;
}

namespace detail {

// Truncation point with tail mass provably below budget.
inline double gardner_upper_limit(double kappa, double budget) {
  double upper = std::max(1.0, -kappa) + 1.0;
  while (gardner_tail_bound(upper, kappa) >= budget) upper += 1.0;
  return upper;
}

}  // namespace detail

// Adaptive-quadrature evaluation of the integral in its forward orientation,
// truncated where the discarded tail is provably below abs_tol/2.
inline double gardner_integral_quadrature(double kappa, const QuadratureSpec& spec = {}) {
  spec.validate();
  const double upper = detail::gardner_upper_limit(kappa, spec.abs_tol / 2);
  const auto integrand = [kappa](double g) {
    const double s = g + kappa;
    return s * s * std_normal_pdf(g);
  };
  return integrate_adaptive(integrand, -kappa, upper, spec);
}

// Same integral in its reflected orientation,
// (1/sqrt(2*pi)) * int_{-inf}^{kappa} (g - kappa)^2 e^{-g^2/2} dg,
// truncated below at -U: substituting g -> -g maps the discarded lower tail
// onto the forward upper tail, so the same bound applies at U.
inline double gardner_integral_quadrature_reflected(double kappa, const QuadratureSpec& spec = {}) {
  spec.validate();
  const double lower = -detail::gardner_upper_limit(kappa, spec.abs_tol / 2);
  const auto integrand = [kappa](double g) {
    const double s = g - kappa;
    return s * s * std_normal_pdf(g);
  };
  return integrate_adaptive(integrand, lower, kappa, spec);
}

}  // namespace gardner
