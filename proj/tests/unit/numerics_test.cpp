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

#include "vps/numerics.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "vps/error.hpp"

namespace vps {
namespace {

TEST(NumericsTest, BisectFindsRoot) {
  EXPECT_NEAR(Bisect([](double x) { return x * x - 2.0; }, 0.0, 2.0),
              std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(Bisect([](double x) { return 1.0 - x; }, 0.0, 3.0), 1.0, 1e-15);
}

TEST(NumericsTest, BisectNeedsSignChange) {
  EXPECT_THROW(Bisect([](double x) { return x * x + 1.0; }, -1.0, 1.0),
               DomainError);
}

TEST(NumericsTest, GoldenSectionFindsInteriorAndEndpointMaxima) {
  const auto a = GoldenSectionMax([](double x) { return -(x - 0.3) * (x - 0.3); },
                                  0.0, 1.0);
  EXPECT_NEAR(a.x, 0.3, 1e-8);
  const auto b = GoldenSectionMax([](double x) { return x; }, 0.0, 1.0);
  EXPECT_EQ(b.x, 1.0);
}

TEST(NumericsTest, AdaptiveSimpsonIntegrates) {
  EXPECT_NEAR(AdaptiveSimpson([](double x) { return std::exp(x); }, 0.0, 1.0, 1e-13),
              std::exp(1.0) - 1.0, 1e-12);
  EXPECT_NEAR(AdaptiveSimpson([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-12),
              2.0 / 3.0, 1e-9);
}

}  // namespace
}  // namespace vps
