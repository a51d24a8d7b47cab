#pragma once

// One-dimensional minimization over a fixed bracket: a coarse scan locates the
// basin (and detects multimodality or a minimizer escaping the bracket),
// golden-section refines it.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gardner/errors.hpp"

namespace gardner {

struct ScalarMinimizeSpec {
  double bracket_lo = -50.0;
  double bracket_hi = 50.0;
  double tol = 1e-10;  // on the argument
  int max_iters = 200;

  void validate() const {
    if (!(bracket_lo < bracket_hi))
      throw std::invalid_argument("ScalarMinimizeSpec: bracket_lo must be < bracket_hi");
    if (!(tol > 0.0)) throw std::invalid_argument("ScalarMinimizeSpec: tol must be > 0");
    if (max_iters < 1) throw std::invalid_argument("ScalarMinimizeSpec: max_iters must be >= 1");
  }
};

struct ScalarMinimum {
  double x = 0.0;
  double value = 0.0;
  int evaluations = 0;
};

namespace detail {

template <class F>
ScalarMinimum golden_section(const F& f, double lo, double hi, double tol, int max_iters,
                             int* evals) {
  constexpr double kInvPhi = 0.61803398874989484820;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  *evals += 2;
  for (int it = 0; it < max_iters && (b - a) > tol; ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    }
    ++*evals;
  }
  ScalarMinimum out;
  out.x = (f1 <= f2) ? x1 : x2;
  out.value = std::fmin(f1, f2);
  return out;
}

}  // namespace detail

// Throws BracketNotMinimizing when an endpoint beats every interior probe.
template <class F>
ScalarMinimum minimize_scalar(F&& f, const ScalarMinimizeSpec& spec = {}) {
  spec.validate();
  const double lo = spec.bracket_lo, hi = spec.bracket_hi;
  int evals = 0;

  auto scan = [&](int points, int& best) {
    std::vector<double> xs(points), fs(points);
    for (int i = 0; i < points; ++i) {
      xs[i] = lo + (hi - lo) * static_cast<double>(i) / (points - 1);
      fs[i] = f(xs[i]);
      ++evals;
    }
    best = 0;
    int local_minima = 0;
    for (int i = 1; i < points; ++i)
      if (fs[i] < fs[best]) best = i;
    for (int i = 1; i + 1 < points; ++i)
      if (fs[i] < fs[i - 1] && fs[i] <= fs[i + 1]) ++local_minima;
    return std::make_pair(xs, local_minima);
  };

  int best;
  auto [xs, minima] = scan(129, best);
  if (minima > 1) {
    // Multiple basins in the coarse scan: fall back to a fine scan before the
    // local refine.
    auto [fine_xs, fine_minima] = scan(4097, best);
    (void)fine_minima;
    xs = std::move(fine_xs);
  }
  if (best == 0 || best == static_cast<int>(xs.size()) - 1) {
    throw BracketNotMinimizing(
        "minimize_scalar: objective is smallest at a bracket endpoint; widen the bracket");
  }

  ScalarMinimum out =
      detail::golden_section(f, xs[best - 1], xs[best + 1], spec.tol, spec.max_iters, &evals);
  out.evaluations = evals;
  return out;
}

}  // namespace gardner
