#include "gardner/capacity.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "oracle_helpers.hpp"

namespace {

using gardner::alpha_c_correlated;
using gardner::alpha_c_uncorrelated;
using gardner::adjusted_margin;
using gardner::correlated_integral;
using gardner::correlated_objective;
using gardner::CorrelationParams;
using gardner::critical_margin;
using gardner::Exactness;

TEST(CorrelationParams, Validation) {
  EXPECT_NO_THROW(CorrelationParams(0.0));
  EXPECT_NO_THROW(CorrelationParams(0.999));
  EXPECT_THROW(CorrelationParams(1.0), std::invalid_argument);
  EXPECT_THROW(CorrelationParams(-0.1), std::invalid_argument);
}

TEST(AlphaCUncorrelated, ClassicalLimitAtZero) {
  const auto r = alpha_c_uncorrelated(0.0);
  EXPECT_NEAR(r.alpha_c, 2.0, 1e-10);
  EXPECT_EQ(r.exactness, Exactness::Exact);
  EXPECT_NEAR(r.alpha_c * r.f_value, 1.0, 1e-12);
}

TEST(AlphaCUncorrelated, CrossCheckedByQuadrature) {
  const auto r = alpha_c_uncorrelated(0.5);
  EXPECT_NEAR(r.alpha_c, 1.0 / gardner::gardner_integral_quadrature(0.5), 1e-10);
  EXPECT_EQ(r.exactness, Exactness::Exact);
}

TEST(AlphaCUncorrelated, NegativeKappaIsUpperBoundOnly) {
  const auto r = alpha_c_uncorrelated(-1.0);
  EXPECT_EQ(r.exactness, Exactness::UpperBoundOnly);
  EXPECT_GT(r.alpha_c, 2.0);
}

TEST(CorrelatedObjective, CollapsesAtZeroBias) {
  const CorrelationParams p0(0.0);
  for (double v : {-3.0, 0.0, 1.0, 17.0}) {
    EXPECT_EQ(correlated_objective(0.7, v, p0), gardner::gardner_integral(0.7));
  }
}

TEST(CorrelatedObjective, ReductionAtVZero) {
  // At v = 0 both mixture terms share the argument kappa / sigma.
  const double val = correlated_objective(0.5, 0.0, CorrelationParams(0.5));
  EXPECT_NEAR(val, gardner::gardner_integral(0.5 / std::sqrt(0.75)), 1e-13);
  EXPECT_NEAR(val, 1.1525010812888924, 1e-13);
  EXPECT_NEAR(val, oracle::correlated_objective_by_quadrature(0.5, 0.0, 0.5), 1e-10);
}

TEST(CorrelatedObjective, MatchesTwoIntegralQuadrature) {
  EXPECT_NEAR(correlated_objective(1.0, 0.3, CorrelationParams(0.8)),
              oracle::correlated_objective_by_quadrature(1.0, 0.3, 0.8), 1e-10);
  EXPECT_NEAR(correlated_objective(1.0, 0.3, CorrelationParams(0.8)), 2.8339547289694906, 1e-13);
}

TEST(CorrelatedObjective, NotEvenInVForPositiveBias) {
  const CorrelationParams p(0.8);
  const double plus = correlated_objective(1.0, 0.3, p);
  const double minus = correlated_objective(1.0, -0.3, p);
  EXPECT_NEAR(minus, 4.9961092139765268, 1e-13);
  EXPECT_GT(std::fabs(plus - minus), 1e-6);
}

TEST(CorrelatedIntegral, DegenerateBiasConvention) {
  const auto ci = correlated_integral(0.5, CorrelationParams(0.0));
  EXPECT_EQ(ci.f_value, gardner::gardner_integral(0.5));
  EXPECT_EQ(ci.v_opt, 0.0);
}

TEST(CorrelatedIntegral, MatchesGridScanOracle) {
  const auto ci = correlated_integral(1.0, CorrelationParams(0.5));
  const auto [scan_f, scan_v] = oracle::correlated_scan(1.0, 0.5);
  EXPECT_NEAR(ci.f_value, scan_f, 1e-6);
  EXPECT_NEAR(ci.v_opt, scan_v, 1e-3);
  EXPECT_NEAR(ci.f_value, 1.8402032381985767, 1e-9);
  EXPECT_NEAR(ci.v_opt, 1.2901891326360410, 1e-6);
}

TEST(CorrelatedIntegral, MinimumBelowAnyProbe) {
  const auto ci = correlated_integral(1.0, CorrelationParams(0.8));
  EXPECT_LE(ci.f_value, correlated_objective(1.0, 0.0, CorrelationParams(0.8)));
}

TEST(CorrelatedIntegral, EscapedBracketIsReported) {
  gardner::ScalarMinimizeSpec spec;
  spec.bracket_lo = 5.0;  // v_opt(kappa=1, ma=0.5) is ~1.29, left of this
  spec.bracket_hi = 50.0;
  EXPECT_THROW(correlated_integral(1.0, CorrelationParams(0.5), spec),
               gardner::BracketNotMinimizing);
}

TEST(AdjustedMargin, IdentityAtZeroBias) {
  EXPECT_EQ(adjusted_margin(0.7, CorrelationParams(0.0)), 0.7);
}

TEST(AdjustedMargin, ConsistentWithGridScan) {
  const auto [scan_f, scan_v] = oracle::correlated_scan(1.0, 0.5);
  (void)scan_f;
  const double expected = (1.0 - scan_v * 0.5) / std::sqrt(0.75);
  EXPECT_NEAR(adjusted_margin(1.0, CorrelationParams(0.5)), expected, 1e-5);
  EXPECT_NEAR(adjusted_margin(1.0, CorrelationParams(0.5)), 0.40980949534630349, 1e-8);
}

TEST(CriticalMargin, SmallBiasLimit) {
  const double kc = critical_margin(CorrelationParams(0.01));
  EXPECT_GT(kc, -0.1);
  EXPECT_LT(kc, 0.1);
  EXPECT_NEAR(kc, 0.0080078704250284114, 1e-6);
}

TEST(CriticalMargin, RootIsReproducibleAndTight) {
  const CorrelationParams p(0.5);
  const double kc1 = critical_margin(p, 1e-8);
  const double kc2 = critical_margin(p, 1e-8);
  EXPECT_EQ(kc1, kc2);
  EXPECT_LE(std::fabs(adjusted_margin(kc1, p)), 1e-8);
  // Sign flips across the root.
  EXPECT_GT(adjusted_margin(kc1 + 0.01, p), 0.0);
  EXPECT_LT(adjusted_margin(kc1 - 0.01, p), 0.0);
}

TEST(CriticalMargin, MonotoneAcrossRootForStrongBias) {
  const CorrelationParams p(0.8);
  const double kc = critical_margin(p, 1e-8);
  EXPECT_LE(std::fabs(adjusted_margin(kc, p)), 1e-8);
  double prev = adjusted_margin(kc - 0.1, p);
  for (double k = kc - 0.08; k <= kc + 0.1 + 1e-12; k += 0.02) {
    const double cur = adjusted_margin(k, p);
    EXPECT_LT(prev, cur) << "kappa = " << k;
    prev = cur;
  }
}

TEST(CriticalMargin, RequiresPositiveBias) {
  EXPECT_THROW(critical_margin(CorrelationParams(0.0)), std::invalid_argument);
}

TEST(AlphaCCorrelated, ReducesToUncorrelated) {
  const auto cor = alpha_c_correlated(0.5, CorrelationParams(0.0));
  const auto unc = alpha_c_uncorrelated(0.5);
  EXPECT_EQ(cor.f_value, unc.f_value);
  EXPECT_EQ(cor.alpha_c, unc.alpha_c);
  EXPECT_EQ(cor.exactness, unc.exactness);
  EXPECT_EQ(cor.v_opt.value(), 0.0);
  EXPECT_EQ(cor.kappa_adj.value(), 0.5);
}

TEST(AlphaCCorrelated, ExactnessSplitsAtCriticalMargin) {
  const CorrelationParams p(0.5);
  const double kc = critical_margin(p, 1e-8);
  EXPECT_EQ(alpha_c_correlated(kc + 0.05, p).exactness, Exactness::Exact);
  EXPECT_EQ(alpha_c_correlated(kc - 0.05, p).exactness, Exactness::UpperBoundOnly);
}

TEST(AlphaCCorrelated, CapacityGrowsWithCorrelation) {
  for (double kappa : {0.0, 0.5, 1.0}) {
    double prev = alpha_c_uncorrelated(kappa).alpha_c;
    for (double ma : {0.3, 0.5, 0.8}) {
      const double cur = alpha_c_correlated(kappa, CorrelationParams(ma)).alpha_c;
      EXPECT_GE(cur, prev) << "kappa = " << kappa << " ma = " << ma;
      prev = cur;
    }
  }
}

TEST(AlphaCCorrelated, CapacityDecreasesInKappa) {
  for (double ma : {0.0, 0.5, 0.8}) {
    const CorrelationParams p(ma);
    double prev = alpha_c_correlated(-1.0, p).alpha_c;
    for (double k = -0.75; k <= 2.0 + 1e-12; k += 0.25) {
      const double cur = alpha_c_correlated(k, p).alpha_c;
      EXPECT_LT(cur, prev) << "ma = " << ma << " kappa = " << k;
      prev = cur;
    }
  }
}

TEST(AlphaCCorrelated, InverseInvariant) {
  const auto r = alpha_c_correlated(1.3, CorrelationParams(0.8));
  EXPECT_NEAR(r.alpha_c * r.f_value, 1.0, 1e-12);
}

}  // namespace
