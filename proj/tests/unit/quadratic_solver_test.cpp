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

#include "vps/quadratic_solver.hpp"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "test_oracles.hpp"
#include "vps/error.hpp"
#include "vps/oracle.hpp"

namespace vps::quad {
namespace {

using testing::Draw;
using testing::kSeed;
using testing::RootByHalving;
using testing::Rng;

const auto kSquare = ProposerPreferences::Power(2.0);
const auto kLinear = ProposerPreferences::Linear();

// Tangency of the line from (s, -c(1)) to the concave branch of U, found by
// halving on the tangency condition directly.
double TangencyByHalving(double s, const ProposerPreferences& prefs) {
  const double c1 = prefs.Loss(1.0);
  auto g = [&](double t) {
    const double slope = 2.0 * prefs.LossDeriv(1.0 - 2.0 * t);
    return slope * (t - s) + prefs.Loss(1.0 - 2.0 * t) - c1;
  };
  const double top = 0.5 - 1e-15;
  if (g(top) >= 0.0) return 0.5;
  return RootByHalving(g, 0.0, top);
}

TEST(QuadSolverTest, IndirectUtilityBranches) {
  EXPECT_NEAR(IndirectUtility(0.25, kSquare), -0.25, 1e-15);
  EXPECT_EQ(IndirectUtility(-0.2, kSquare), -1.0);
  EXPECT_NEAR(IndirectUtility(0.3, kLinear), -0.4, 1e-15);
  EXPECT_EQ(IndirectUtility(0.7, kLinear), 0.0);
  EXPECT_NEAR(IndirectUtility(1e-12, kSquare), -1.0, 1e-11);
  EXPECT_NEAR(IndirectUtility(0.5 - 1e-12, kSquare), 0.0, 1e-11);
}

TEST(QuadSolverTest, OptimalProposal) {
  EXPECT_EQ(OptimalProposal(-0.3), 0.0);
  EXPECT_DOUBLE_EQ(OptimalProposal(0.2), 0.4);
  EXPECT_EQ(OptimalProposal(0.8), 1.0);
}

TEST(QuadSolverTest, NoInfoExamples) {
  EXPECT_TRUE(NoInfoOptimal(TypeDistribution::Uniform(-0.2, 1.0), kSquare));
  EXPECT_FALSE(NoInfoOptimal(TypeDistribution::Uniform(-0.5, 1.0), kSquare));
  EXPECT_TRUE(NoInfoOptimal(TypeDistribution::Uniform(0.05, 0.6), kSquare));
  EXPECT_TRUE(NoInfoOptimal(TypeDistribution::Uniform(0.05, 0.6), kLinear));
  EXPECT_FALSE(NoInfoOptimal(TypeDistribution::Uniform(-1.0, 1.0), kSquare));
}

TEST(QuadSolverTest, NoInfoRequiresMeanBelowHalf) {
  EXPECT_THROW(NoInfoOptimal(TypeDistribution::Uniform(0.5, 0.9), kSquare),
               AssumptionError);
}

TEST(QuadSolverTest, NoInfoAgreesWithPartitionOracle) {
  const auto d = TypeDistribution::Uniform(-0.2, 1.0);
  const double pooled = IndirectUtility(d.Mean(), kSquare);
  const auto best = oracle::PartitionSearch(d, kSquare, 3, 200);
  EXPECT_LE(best.value, pooled + 1e-9);
}

TEST(QuadSolverTest, TangencyMatchesHalving) {
  for (const auto& prefs :
       {kSquare, ProposerPreferences::Power(1.5), ProposerPreferences::Power(3.0),
        ProposerPreferences::Exponential(0.5), ProposerPreferences::Exponential(2.0),
        ProposerPreferences::Exponential(4.0), kLinear}) {
    for (int i = 0; i <= 40; ++i) {
      const double s = -2.0 + 2.0 * i / 40.0 - 1e-3;
      EXPECT_NEAR(TangencyPoint(s, prefs), TangencyByHalving(s, prefs), 1e-10)
          << prefs.ToString() << " s=" << s;
    }
  }
}

TEST(QuadSolverTest, SquareTangencyClosedForm) {
  EXPECT_NEAR(TangencyPoint(-1.0 / 3.0, kSquare), 1.0 / 3.0, 1e-12);
}

TEST(QuadSolverTest, CutoffExamples) {
  const auto a = SolveCutoff(TypeDistribution::Uniform(-1.0, 1.0), kSquare);
  EXPECT_NEAR(a.s_star, -1.0 / 3.0, 1e-10);
  EXPECT_NEAR(a.s_upper, 1.0 / 3.0, 1e-10);
  const auto b = SolveCutoff(TypeDistribution::Uniform(-0.5, 1.1), kLinear);
  EXPECT_NEAR(b.s_star, -0.1, 1e-10);
  EXPECT_NEAR(b.s_upper, 0.5, 1e-10);
  const auto c = SolveCutoff(TypeDistribution::Uniform(-1.0, 0.8), kLinear);
  EXPECT_NEAR(c.s_star, 0.0, 1e-12);
  EXPECT_NEAR(c.s_upper, 0.4, 1e-12);
}

TEST(QuadSolverTest, CutoffLinearCornerAgreesWithOracle) {
  const auto d = TypeDistribution::Uniform(-1.0, 0.8);
  const auto out = SolvePersuasionFirst(d, kLinear);
  const auto best = oracle::PartitionSearch(d, kLinear, 2, 300);
  EXPECT_NEAR(out.value, best.value, 1e-6);
  EXPECT_LE(best.value, out.value + 1e-9);
}

TEST(QuadSolverTest, CutoffRejectsAtoms) {
  const auto d = TypeDistribution::Atoms({{-0.5, 0.5}, {0.5, 0.5}});
  EXPECT_THROW(SolveCutoff(d, kSquare), UnsupportedError);
}

TEST(QuadSolverTest, CutoffRejectsNoInfoInstance) {
  EXPECT_THROW(SolveCutoff(TypeDistribution::Uniform(-0.2, 1.0), kSquare),
               AssumptionError);
}

TEST(QuadSolverTest, PersuasionFirstExamples) {
  const auto a = SolvePersuasionFirst(TypeDistribution::Uniform(-1.0, 1.0), kSquare);
  EXPECT_EQ(a.regime, Regime::kBinaryCutoff);
  EXPECT_NEAR(a.s_star, -1.0 / 3.0, 1e-10);
  EXPECT_NEAR(a.proposal, 2.0 / 3.0, 1e-10);
  EXPECT_NEAR(a.value, -11.0 / 27.0, 1e-10);
  EXPECT_NEAR(a.veto_prob, 1.0 / 3.0, 1e-10);

  const auto b = SolvePersuasionFirst(TypeDistribution::Uniform(-0.2, 1.0), kSquare);
  EXPECT_EQ(b.regime, Regime::kNoInfo);
  EXPECT_NEAR(b.proposal, 0.8, 1e-14);
  EXPECT_NEAR(b.value, -0.04, 1e-14);
  EXPECT_EQ(b.veto_prob, 0.0);

  const auto c = SolvePersuasionFirst(TypeDistribution::Uniform(0.5, 0.9), kLinear);
  EXPECT_EQ(c.regime, Regime::kIdealAccepted);
  EXPECT_EQ(c.proposal, 1.0);
  EXPECT_EQ(c.value, 0.0);
}

TEST(QuadSolverTest, ProposalFirstExamplesMatch) {
  for (const auto& [d, prefs] :
       std::vector<std::pair<TypeDistribution, ProposerPreferences>>{
           {TypeDistribution::Uniform(-1.0, 1.0), kSquare},
           {TypeDistribution::Uniform(-0.2, 1.0), kSquare},
           {TypeDistribution::Uniform(0.5, 0.9), kLinear}}) {
    const auto a = SolvePersuasionFirst(d, prefs);
    const auto b = SolveProposalFirst(d, prefs);
    EXPECT_EQ(a.regime, b.regime);
    EXPECT_NEAR(a.proposal, b.proposal, 1e-9);
    EXPECT_NEAR(a.value, b.value, 1e-9);
    EXPECT_NEAR(a.veto_prob, b.veto_prob, 1e-9);
  }
}

TEST(QuadSolverTest, ZeroMeanProvidesInformation) {
  const auto out = SolvePersuasionFirst(TypeDistribution::Uniform(-1.0, 1.0),
                                        ProposerPreferences::Exponential(1.0));
  EXPECT_EQ(out.regime, Regime::kBinaryCutoff);
}

TEST(QuadSolverTest, FullInfoExamples) {
  EXPECT_TRUE(FullInfoOptimal(TypeDistribution::Uniform(-0.5, 0.4), kLinear));
  EXPECT_FALSE(FullInfoOptimal(TypeDistribution::Uniform(-0.5, 0.8), kLinear));
  EXPECT_FALSE(FullInfoOptimal(TypeDistribution::Uniform(-0.5, 0.4), kSquare));
}

TEST(QuadSolverTest, PayoffOfPartitions) {
  const auto d = TypeDistribution::Uniform(-1.0, 1.0);
  EXPECT_NEAR(PayoffOfExperiment(d, kSquare, IntervalPartition{{}}), -1.0, 1e-15);
  EXPECT_NEAR(PayoffOfExperiment(d, kSquare, IntervalPartition{{0.0}}), -0.5,
              1e-14);
  const auto best = SolvePersuasionFirst(d, kSquare);
  EXPECT_NEAR(PayoffOfExperiment(d, kSquare, IntervalPartition{{best.s_star}}),
              best.value, 1e-12);
  const auto d2 = TypeDistribution::Uniform(-0.2, 1.0);
  EXPECT_NEAR(PayoffOfExperiment(d2, kSquare, IntervalPartition{{}}),
              SolvePersuasionFirst(d2, kSquare).value, 1e-15);
}

TEST(QuadSolverTest, PayoffOfSignalMap) {
  const auto d = TypeDistribution::Atoms({{-0.5, 0.5}, {0.5, 0.5}});
  // Full revelation: status quo on the low atom, ideal on the high one.
  const SignalMap reveal{{{1.0, 0.0}, {0.0, 1.0}}};
  EXPECT_NEAR(PayoffOfExperiment(d, kSquare, reveal), -0.5, 1e-15);
  const SignalMap pool{{{1.0}, {1.0}}};
  EXPECT_NEAR(PayoffOfExperiment(d, kSquare, pool), -1.0, 1e-15);
  const SignalMap bad{{{0.5, 0.4}, {0.0, 1.0}}};
  EXPECT_THROW(PayoffOfExperiment(d, kSquare, bad), DomainError);
}

struct Instance {
  TypeDistribution d;
  ProposerPreferences prefs;
};

std::vector<Instance> RandomInstances(Rng& rng, int n) {
  std::vector<Instance> out;
  while (static_cast<int>(out.size()) < n) {
    auto d = out.size() % 4 == 3 ? testing::RandomTilt(rng)
                                 : testing::RandomUniform(rng);
    out.push_back({d, testing::RandomPrefs(rng)});
  }
  return out;
}

TEST(QuadSolverProperty, TimingEquivalence) {
  Rng rng(kSeed);
  for (const auto& [d, prefs] : RandomInstances(rng, 100)) {
    const auto a = SolvePersuasionFirst(d, prefs);
    const auto b = SolveProposalFirst(d, prefs);
    EXPECT_EQ(a.regime, b.regime) << d.ToString() << " " << prefs.ToString();
    EXPECT_NEAR(a.value, b.value, 1e-9) << d.ToString() << " " << prefs.ToString();
    EXPECT_NEAR(a.proposal, b.proposal, 1e-9);
  }
}

TEST(QuadSolverProperty, CutoffInvariants) {
  Rng rng(kSeed + 1);
  for (const auto& [d, prefs] : RandomInstances(rng, 100)) {
    const auto out = SolvePersuasionFirst(d, prefs);
    const double c1 = prefs.Loss(1.0);
    if (out.regime == Regime::kIdealAccepted) {
      EXPECT_EQ(out.value, 0.0);
      continue;
    }
    const double pooled = IndirectUtility(d.Mean(), prefs);
    EXPECT_GE(out.value, pooled - 1e-12);
    if (out.regime == Regime::kNoInfo) {
      EXPECT_NEAR(out.proposal, std::min(2.0 * d.Mean(), 1.0), 1e-15);
      EXPECT_EQ(out.veto_prob, 0.0);
      continue;
    }
    EXPECT_LE(out.s_star, 0.0);
    EXPECT_GE(out.s_star, d.lower());
    EXPECT_NEAR(d.CondMeanAbove(out.s_star), out.s_upper, 1e-9);
    EXPECT_NEAR(out.proposal, std::min(2.0 * out.s_upper, 1.0), 1e-12);
    EXPECT_NEAR(out.veto_prob, d.Cdf(out.s_star), 1e-12);
    const double slope =
        (IndirectUtility(out.s_upper, prefs) + c1) / (out.s_upper - out.s_star);
    double worst = -1e300;
    for (int i = 0; i <= 1000; ++i) {
      const double s = out.s_star + (d.upper() - out.s_star) * i / 1000.0;
      const double chord = -c1 + slope * (s - out.s_star);
      worst = std::max(worst, IndirectUtility(s, prefs) - chord);
    }
    EXPECT_LE(worst, 1e-9) << d.ToString() << " " << prefs.ToString();
  }
}

TEST(QuadSolverProperty, PartitionsNeverBeatSolver) {
  Rng rng(kSeed + 2);
  for (const auto& [d, prefs] : RandomInstances(rng, 16)) {
    const auto out = SolvePersuasionFirst(d, prefs);
    const auto best = oracle::PartitionSearch(d, prefs, 2, 80);
    EXPECT_LE(best.value, out.value + 1e-6) << d.ToString() << " " << prefs.ToString();
  }
}

TEST(QuadSolverProperty, ExponentialRiskAversionShrinksCutoff) {
  const auto d = TypeDistribution::Uniform(-1.0, 1.0);
  double prev_star = 1.0;
  double prev_upper = 1.0;
  for (double alpha : {0.5, 1.0, 2.0, 4.0}) {
    const auto c = SolveCutoff(d, ProposerPreferences::Exponential(alpha));
    EXPECT_LT(c.s_star, prev_star);
    EXPECT_LT(c.s_upper, prev_upper);
    prev_star = c.s_star;
    prev_upper = c.s_upper;
  }
}

TEST(QuadSolverProperty, TiltShiftsCutoff) {
  const auto base = TypeDistribution::Uniform(-1.0, 1.0);
  double prev_star = 1.0;
  double prev_cdf = 1.0;
  double prev_upper = -1.0;
  for (double lambda : {0.0, 0.5, 1.0, 2.0}) {
    const auto d = base.Tilt(lambda);
    const auto out = SolvePersuasionFirst(d, kSquare);
    const double cdf = d.Cdf(out.s_star);
    EXPECT_LE(out.s_star, prev_star + 1e-12) << lambda;
    EXPECT_LE(cdf, prev_cdf + 1e-12) << lambda;
    EXPECT_GE(out.s_upper, prev_upper - 1e-12) << lambda;
    prev_star = out.s_star;
    prev_cdf = cdf;
    prev_upper = out.s_upper;
  }
}

TEST(QuadSolverProperty, AtomsWithHighMeanAreIdeal) {
  const auto d = TypeDistribution::Atoms({{0.4, 0.5}, {0.8, 0.5}});
  EXPECT_EQ(SolveProposalFirst(d, kSquare).regime, Regime::kIdealAccepted);
  EXPECT_EQ(SolvePersuasionFirst(d, kSquare).regime, Regime::kIdealAccepted);
}

}  // namespace
}  // namespace vps::quad
