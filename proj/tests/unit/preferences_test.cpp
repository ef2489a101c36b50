// Copyright 2026 The VPS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vps/preferences.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "test_oracles.hpp"
#include "vps/error.hpp"

namespace vps {
namespace {

using testing::kSeed;
using testing::Rng;

TEST(PreferencesTest, LossValues) {
  EXPECT_DOUBLE_EQ(ProposerPreferences::Power(2.0).Loss(0.5), 0.25);
  EXPECT_DOUBLE_EQ(ProposerPreferences::Linear().Loss(0.3), 0.3);
  EXPECT_NEAR(ProposerPreferences::Exponential(1.0).Loss(1.0), std::exp(1.0) - 1.0,
              1e-15);
  EXPECT_EQ(ProposerPreferences::Power(3.0).Loss(0.0), 0.0);
}

TEST(PreferencesTest, UtilityValues) {
  const auto sq = ProposerPreferences::Power(2.0);
  EXPECT_DOUBLE_EQ(sq.Utility(0.0), -1.0);
  EXPECT_DOUBLE_EQ(sq.Utility(2.0 / 3.0), -1.0 / 9.0);
  EXPECT_EQ(sq.Utility(1.0), 0.0);
  EXPECT_DOUBLE_EQ(ProposerPreferences::Linear().Utility(0.25), -0.75);
}

TEST(PreferencesTest, RiskAversionValues) {
  EXPECT_EQ(ProposerPreferences::Linear().RiskAversion(0.4), 0.0);
  EXPECT_DOUBLE_EQ(ProposerPreferences::Power(2.0).RiskAversion(0.0), 1.0);
  EXPECT_DOUBLE_EQ(ProposerPreferences::Power(3.0).RiskAversion(0.5), 4.0);
  EXPECT_DOUBLE_EQ(ProposerPreferences::Exponential(1.7).RiskAversion(0.2), 1.7);
}

TEST(PreferencesTest, RiskAversionMatchesFiniteDifferences) {
  const double h = 1e-5;
  for (const auto& prefs :
       {ProposerPreferences::Power(2.0), ProposerPreferences::Power(3.5),
        ProposerPreferences::Exponential(2.0)}) {
    for (double a : {h, 0.3, 0.7}) {
      const double d1 = (prefs.Utility(a + h) - prefs.Utility(a - h)) / (2 * h);
      const double d2 = (prefs.Utility(a + h) - 2 * prefs.Utility(a) +
                         prefs.Utility(a - h)) / (h * h);
      EXPECT_NEAR(-d2 / d1, prefs.RiskAversion(a), 1e-4) << prefs.ToString();
    }
  }
}

TEST(PreferencesTest, LinearLeftDerivativeAtOne) {
  EXPECT_DOUBLE_EQ(ProposerPreferences::Linear().UtilityDeriv(1.0), 1.0);
  EXPECT_DOUBLE_EQ(ProposerPreferences::Power(2.0).UtilityDeriv(1.0), 0.0);
}

TEST(PreferencesTest, InvalidInputs) {
  EXPECT_THROW(ProposerPreferences::Power(0.5), DomainError);
  EXPECT_THROW(ProposerPreferences::Exponential(0.0), DomainError);
  EXPECT_THROW(ProposerPreferences::Exponential(-1.0), DomainError);
  const auto sq = ProposerPreferences::Power(2.0);
  EXPECT_THROW(sq.Loss(-0.1), DomainError);
  EXPECT_THROW(sq.Utility(1.1), DomainError);
  EXPECT_THROW(sq.Utility(-0.1), DomainError);
  EXPECT_THROW(sq.RiskAversion(1.0), DomainError);
}

TEST(PreferencesProperty, LossDerivativeMatchesFiniteDifferences) {
  Rng rng(kSeed);
  for (int trial = 0; trial < 60; ++trial) {
    const auto prefs = testing::RandomPrefs(rng);
    for (int i = 1; i <= 50; ++i) {
      const double x = 0.02 * i;
      const double h = 1e-6;
      const double fd = (prefs.Loss(x + h) - prefs.Loss(x - h)) / (2 * h);
      EXPECT_NEAR(fd, prefs.LossDeriv(x), 1e-6 * std::max(1.0, std::fabs(fd)))
          << prefs.ToString() << " x=" << x;
    }
  }
}

TEST(PreferencesProperty, UtilityConcaveIncreasingWithRootAtOne) {
  Rng rng(kSeed + 1);
  for (int trial = 0; trial < 60; ++trial) {
    const auto prefs = testing::RandomPrefs(rng);
    EXPECT_EQ(prefs.Utility(1.0), 0.0);
    double prev = -1e300;
    for (int i = 0; i <= 200; ++i) {
      const double a = i / 200.0;
      const double u = prefs.Utility(a);
      EXPECT_GE(u, prev) << prefs.ToString();
      EXPECT_LE(u, 0.0);
      prev = u;
      if (i > 0 && i < 200) {
        const double mid = 0.5 * (prefs.Utility(a - 0.005) + prefs.Utility(a + 0.005));
        EXPECT_LE(mid, u + 1e-14) << prefs.ToString();
      }
    }
  }
}

TEST(PreferencesProperty, ExponentialRiskAversionOrdersWithAlpha) {
  for (double a = 0.0; a < 1.0; a += 0.1) {
    double prev = 0.0;
    for (double alpha : {0.5, 1.0, 2.0, 4.0}) {
      const double r = ProposerPreferences::Exponential(alpha).RiskAversion(a);
      EXPECT_GT(r, prev);
      prev = r;
    }
  }
}

}  // namespace
}  // namespace vps
