#include "gardner/quadrature.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "gardner/normal.hpp"

namespace {

TEST(QuadratureSpec, RejectsInvalidFields) {
  gardner::QuadratureSpec spec;
  spec.abs_tol = 0.0;
  EXPECT_THROW(spec.validate(), std::invalid_argument);
  spec = {};
  spec.rel_tol = -1.0;
  EXPECT_THROW(spec.validate(), std::invalid_argument);
  spec = {};
  spec.max_subdivisions = 0;
  EXPECT_THROW(spec.validate(), std::invalid_argument);
}

TEST(IntegrateAdaptive, Polynomial) {
  const double v = gardner::integrate_adaptive([](double x) { return x * x; }, 0.0, 1.0);
  EXPECT_NEAR(v, 1.0 / 3.0, 1e-14);
}

TEST(IntegrateAdaptive, OscillatoryAgainstClosedForm) {
  const double v =
      gardner::integrate_adaptive([](double x) { return std::sin(x); }, 0.0, 10.0);
  EXPECT_NEAR(v, 1.0 - std::cos(10.0), 1e-11);
}

TEST(IntegrateAdaptive, GaussianMass) {
  const double v = gardner::integrate_adaptive(
      [](double g) { return gardner::std_normal_pdf(g); }, -10.0, 10.0);
  EXPECT_NEAR(v, 1.0, 1e-12);
}

TEST(IntegrateAdaptive, EmptyInterval) {
  EXPECT_EQ(gardner::integrate_adaptive([](double x) { return x; }, 2.0, 2.0), 0.0);
}

TEST(IntegrateAdaptive, ThrowsWhenBudgetExhausted) {
  gardner::QuadratureSpec spec;
  spec.abs_tol = 1e-15;
  spec.rel_tol = 1e-16;
  spec.max_subdivisions = 1;
  try {
    gardner::integrate_adaptive([](double x) { return std::exp(-x) * std::sin(7 * x) + x * x; },
                                0.0, 8.0, spec);
    FAIL() << "expected ToleranceNotMet";
  } catch (const gardner::ToleranceNotMet& e) {
    EXPECT_TRUE(std::isfinite(e.best_estimate()));
  }
}

}  // namespace
