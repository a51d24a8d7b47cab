#pragma once

#include <stdexcept>
#include <string>

namespace gardner {

// Adaptive quadrature ran out of subdivisions before reaching the error target.
// Carries the best estimate obtained so far.
class ToleranceNotMet : public std::runtime_error {
 public:
  ToleranceNotMet(const std::string& what, double best_estimate)
      : std::runtime_error(what), best_estimate_(best_estimate) {}

  double best_estimate() const { return best_estimate_; }

 private:
  double best_estimate_;
};

// A scalar minimization bracket whose objective is lower at an endpoint than at
// every interior probe: the minimizer escaped the bracket.
class BracketNotMinimizing : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Root bracketing failed: the function never changes sign over the search
// interval, even after expansion.
class NoSignChange : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gardner
