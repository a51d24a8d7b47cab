#include "gardner/normal.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "gardner/quadrature.hpp"

namespace {

using gardner::std_normal_cdf;
using gardner::std_normal_pdf;

TEST(StdNormalPdf, ValueAtZero) {
  EXPECT_DOUBLE_EQ(std_normal_pdf(0.0), 0.3989422804014327);
}

TEST(StdNormalPdf, EvenFunction) {
  for (double z : {0.1, 0.5, 1.0, 2.3, 5.0, 7.7}) {
    EXPECT_EQ(std_normal_pdf(z), std_normal_pdf(-z)) << "z = " << z;
  }
}

TEST(StdNormalPdf, MatchesIndependentComposition) {
  // exp/sqrt primitives composed directly, no shared constant.
  const double expected = std::exp(-0.5) / std::sqrt(8.0 * std::atan(1.0));
  EXPECT_NEAR(std_normal_pdf(1.0), expected, 1e-15);
  EXPECT_NEAR(std_normal_pdf(1.0), 0.24197072451914334, 1e-16);
}

TEST(StdNormalCdf, ValueAtZero) { EXPECT_DOUBLE_EQ(std_normal_cdf(0.0), 0.5); }

TEST(StdNormalCdf, UpperTailSaturates) {
  EXPECT_GE(std_normal_cdf(8.0), 1.0 - 1e-15);
}

TEST(StdNormalCdf, MatchesQuadratureOracle) {
  // Phi(1) by numeric integration of the pdf over (-inf, 1]; truncation at
  // -40 discards < 1e-300 of mass.
  gardner::QuadratureSpec spec;
  spec.abs_tol = 1e-13;
  const double by_quadrature =
      gardner::integrate_adaptive([](double g) { return std_normal_pdf(g); }, -40.0, 1.0, spec);
  EXPECT_NEAR(std_normal_cdf(1.0), by_quadrature, 1e-12);
  EXPECT_NEAR(std_normal_cdf(1.0), 0.84134474606854295, 1e-15);
}

TEST(StdNormalCdf, ComplementIdentity) {
  for (double z = 0.0; z <= 10.0; z += 0.1) {
    EXPECT_NEAR(std_normal_cdf(z) + std_normal_cdf(-z), 1.0, 1e-14) << "z = " << z;
  }
}

TEST(StdNormalCdf, StrictlyInsideUnitInterval) {
  for (double z : {-60.0, -40.0, -8.0, 8.0, 40.0, 60.0}) {
    const double p = std_normal_cdf(z);
    EXPECT_GT(p, 0.0) << "z = " << z;
    EXPECT_LT(p, 1.0) << "z = " << z;
  }
}

TEST(StdNormalCdf, AgreesWithPlatformErfc) {
  // Cross-check against libm; both sides claim ~1e-16 relative accuracy.
  for (double z = -12.0; z <= 12.0; z += 0.0625) {
    const double reference = 0.5 * std::erfc(-z * gardner::kInvSqrt2);
    EXPECT_NEAR(std_normal_cdf(z), reference, 4e-16 + 4e-16 * reference) << "z = " << z;
  }
}

TEST(StdNormalCdf, TailRelativeAccuracy) {
  // Deep left tail vs libm, relative terms.
  for (double z : {-10.0, -15.0, -20.0}) {
    const double reference = 0.5 * std::erfc(-z * gardner::kInvSqrt2);
    EXPECT_NEAR(std_normal_cdf(z) / reference, 1.0, 1e-13) << "z = " << z;
  }
}

}  // namespace
