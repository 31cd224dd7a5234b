#include <gtest/gtest.h>

#include <cmath>

#include "copthrottle/copthrottle.hpp"
#include "oracles.hpp"

using namespace copthrottle;

TEST(LambertW, KnownValues) {
  EXPECT_EQ(lambert_w(0), 0);
  EXPECT_NEAR(static_cast<double>(lambert_w(1)), 0.567143290409784, 1e-14);  // omega constant
  EXPECT_NEAR(static_cast<double>(lambert_w(std::exp(1.0L))), 1.0, 1e-14);
  EXPECT_THROW(lambert_w(-1), InvalidInput);
}

TEST(LambertW, ResidualOnLogGrid) {
  EXPECT_TRUE(lambert_grid_ok());
  for (int i = 0; i < 60; ++i) {
    long double x = 0.1L * std::pow(1e7L, static_cast<long double>(i) / 59.0L);
    long double w = lambert_w(x);
    EXPECT_LE(std::fabs(w * std::exp(w) - x), 1e-12L) << static_cast<double>(x);
  }
}

TEST(LambertW, MatchesBisection) {
  for (double x : {0.01, 0.5, 2.0, 10.0, 1234.5, 9.9e5}) {
    double want = static_cast<double>(oracle::lambert_bisect(x));
    EXPECT_NEAR(static_cast<double>(lambert_w(x)), want, 1e-10 * std::max(1.0, want));
  }
}

TEST(LambertParams, TauAndBeta) {
  LambertParams p = lambert_params(1000);
  long double ln = std::log(1000.0L);
  long double w = lambert_w(ln);
  EXPECT_NEAR(static_cast<double>(p.tau * p.tau * w), static_cast<double>(ln), 1e-9);
  EXPECT_NEAR(static_cast<double>(std::log(p.beta)), static_cast<double>(p.tau * p.tau * std::log(p.tau)), 1e-9);
  EXPECT_EQ(p.guard_r1, static_cast<int>(std::ceil(p.tau)));
  EXPECT_GE(p.mid_len, 1);
  EXPECT_THROW(lambert_params(1), InvalidInput);
}
