#pragma once

// Adaptive Gauss-Kronrod (G7,K15) quadrature over a finite interval.
// Intervals whose Gauss/Kronrod discrepancy exceeds the local budget are
// split; the subdivision budget is capped by QuadratureSpec.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "gardner/errors.hpp"

namespace gardner {

struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-13;
  int max_subdivisions = 2000;

  void validate() const {
    if (!(abs_tol > 0.0)) throw std::invalid_argument("QuadratureSpec: abs_tol must be > 0");
    if (!(rel_tol > 0.0)) throw std::invalid_argument("QuadratureSpec: rel_tol must be > 0");
    if (max_subdivisions < 1)
      throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 1");
  }
};

namespace detail {

// Kronrod-15 abscissae on [0,1] and the paired Gauss-7 / Kronrod-15 weights.
inline constexpr double kGK15Nodes[8] = {
    0.0000000000000000000, 0.2077849550078984676, 0.4058451513773971669,
    0.5860872354676911303, 0.7415311855993944399, 0.8648644233597690728,
    0.9491079123427585245, 0.9914553711208126392};
inline constexpr double kK15Weights[8] = {
    0.2094821410847278280, 0.2044329400752988924, 0.1903505780647854099,
    0.1690047266392679028, 0.1406532597155259187, 0.1047900103222501838,
    0.0630920926299785533, 0.0229353220105292250};
inline constexpr double kG7Weights[4] = {
    0.4179591836734693878, 0.3818300505051189449, 0.2797053914892766679,
    0.1294849661688696933};

template <class F>
void gk15(const F& f, double a, double b, double& kronrod, double& err) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double f0 = f(mid);
  double k15 = kK15Weights[0] * f0;
  double g7 = kG7Weights[0] * f0;
  for (int i = 1; i < 8; ++i) {
    const double dx = half * kGK15Nodes[i];
    const double fsum = f(mid - dx) + f(mid + dx);
    k15 += kK15Weights[i] * fsum;
    if (i % 2 == 0) g7 += kG7Weights[i / 2] * fsum;
  }
  kronrod = k15 * half;
  err = std::fabs((k15 - g7) * half);
}

}  // namespace detail

// Integrates f over [a, b]. Throws ToleranceNotMet when the subdivision budget
// is exhausted before every interval meets its share of the error target.
template <class F>
double integrate_adaptive(const F& f, double a, double b, const QuadratureSpec& spec = {}) {
  spec.validate();
  if (!(a < b)) {
    if (a == b) return 0.0;
    throw std::invalid_argument("integrate_adaptive: requires a <= b");
  }

  struct Interval {
    double lo, hi;
  };
  const double total_len = b - a;
  std::vector<Interval> stack{{a, b}};
  double sum = 0.0;
  int splits = 0;

  while (!stack.empty()) {
    const Interval iv = stack.back();
    stack.pop_back();

    double estimate, err;
    detail::gk15(f, iv.lo, iv.hi, estimate, err);

    const double local_abs = spec.abs_tol * (iv.hi - iv.lo) / total_len;
    if (err <= local_abs || err <= spec.rel_tol * std::fabs(estimate)) {
      sum += estimate;
      continue;
    }
    if (splits >= spec.max_subdivisions) {
      throw ToleranceNotMet(
          "integrate_adaptive: " + std::to_string(spec.max_subdivisions) +
              " subdivisions exhausted before reaching the error target",
          sum + estimate);
    }
    ++splits;
    const double mid = 0.5 * (iv.lo + iv.hi);
    stack.push_back({iv.lo, mid});
    stack.push_back({mid, iv.hi});
  }
  return sum;
}

}  // namespace gardner
