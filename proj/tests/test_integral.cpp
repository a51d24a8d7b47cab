#include "gardner/integral.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace {

using gardner::gardner_integral;
using gardner::gardner_integral_quadrature;
using gardner::gardner_integral_quadrature_reflected;

TEST(GardnerIntegral, HalfAtZero) { EXPECT_NEAR(gardner_integral(0.0), 0.5, 1e-15); }

TEST(GardnerIntegral, FrozenOracleValues) {
  // High-precision quadrature of the defining integral, frozen.
  EXPECT_NEAR(gardner_integral(0.5), 1.0403607399746661, 1e-14);
  EXPECT_NEAR(gardner_integral(1.0), 1.9246602166562292, 1e-14);
  EXPECT_NEAR(gardner_integral(-1.0), 0.075339783343770753, 1e-15);
  EXPECT_NEAR(gardner_integral(-2.0), 0.0057687267145199321, 1e-16);
  EXPECT_NEAR(gardner_integral(-3.0), 0.00020343508048692374, 1e-17);
  EXPECT_NEAR(gardner_integral(2.0), 4.9942312732854801, 1e-14);
}

TEST(GardnerIntegral, MatchesQuadrature) {
  EXPECT_NEAR(gardner_integral(0.5), gardner_integral_quadrature(0.5), 1e-10);
  EXPECT_NEAR(gardner_integral(-2.0), gardner_integral_quadrature(-2.0), 1e-10);
  EXPECT_GT(gardner_integral_quadrature(-2.0), 0.0);
}

TEST(GardnerIntegral, QuadratureAtZeroDefault) {
  EXPECT_NEAR(gardner_integral_quadrature(0.0), 0.5, 1e-10);
}

TEST(GardnerIntegral, ClosedFormVsQuadratureOnCoarseGrid) {
  for (double kappa = -6.0; kappa <= 6.0 + 1e-12; kappa += 0.25) {
    EXPECT_NEAR(gardner_integral(kappa), gardner_integral_quadrature(kappa), 1e-10)
        << "kappa = " << kappa;
  }
}

TEST(GardnerIntegral, TightSpecAgreesAtSpotKappas) {
  gardner::QuadratureSpec tight;
  tight.abs_tol = 1e-13;
  tight.rel_tol = 1e-14;
  for (double kappa : {-3.0, -1.0, 0.0, 1.0, 3.0}) {
    EXPECT_NEAR(gardner_integral(kappa), gardner_integral_quadrature(kappa, tight), 1e-10)
        << "kappa = " << kappa;
  }
}

TEST(GardnerIntegral, StrictlyIncreasing) {
  double prev = gardner_integral(-6.0);
  for (double kappa = -5.99; kappa <= 6.0 + 1e-12; kappa += 0.01) {
    const double cur = gardner_integral(kappa);
    EXPECT_LT(prev, cur) << "kappa = " << kappa;
    prev = cur;
  }
}

TEST(GardnerIntegral, Asymptotics) {
  EXPECT_NEAR(gardner_integral(10.0) / (1.0 + 100.0), 1.0, 1e-3);
  EXPECT_LT(gardner_integral(-8.0), 1e-12);
  EXPECT_GT(gardner_integral(-8.0), 0.0);
}

TEST(GardnerIntegral, BothOrientationsAgree) {
  for (double kappa : {-3.0, -1.0, 0.0, 0.5, 1.0, 3.0}) {
    EXPECT_NEAR(gardner_integral_quadrature(kappa), gardner_integral_quadrature_reflected(kappa),
                1e-10)
        << "kappa = " << kappa;
  }
}

TEST(GardnerIntegral, QuadratureBudgetFailure) {
  gardner::QuadratureSpec spec;
  spec.abs_tol = 1e-15;
  spec.rel_tol = 1e-16;
  spec.max_subdivisions = 1;
  EXPECT_THROW(gardner_integral_quadrature(0.0, spec), gardner::ToleranceNotMet);
}

TEST(GardnerIntegral, TailBoundDominatesTrueTail) {
  // True mass above U, via the exact tail expression, stays under the bound.
  for (double kappa : {-2.0, 0.0, 1.5}) {
    for (double upper = std::max(1.0, -kappa) + 1.0; upper < 8.0; upper += 1.0) {
      const double truth = (1.0 + kappa * kappa) * gardner::std_normal_cdf(-upper) +
                           (upper + 2.0 * kappa) * gardner::std_normal_pdf(upper);
      EXPECT_LE(truth, gardner::gardner_tail_bound(upper, kappa))
          << "kappa = " << kappa << " U = " << upper;
    }
  }
}

}  // namespace
