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

#ifndef VPS_QUADRATIC_SOLVER_HPP_
#define VPS_QUADRATIC_SOLVER_HPP_

#include <string>

#include "vps/distribution.hpp"
#include "vps/experiment.hpp"
#include "vps/preferences.hpp"

// Optimal persuasion and proposals when the Vetoer has quadratic loss.
namespace vps::quad {

enum class Regime { kIdealAccepted, kNoInfo, kBinaryCutoff, kStatusQuoOnly };

std::string RegimeName(Regime r);

// For the pooling regimes (kIdealAccepted, kNoInfo) the reported cutoff is
// the bottom of the support, so that veto_prob = F(s_star) = 0 and
// s_upper = E[theta]. kStatusQuoOnly leaves both cutoffs NaN.
struct SolveOutcome {
  Regime regime;
  double s_star;
  double s_upper;
  double proposal;
  double value;
  double veto_prob;
};

struct Cutoff {
  double s_star;
  double s_upper;
};

// Proposal chosen when the posterior mean is s: 0, 2s, or 1.
double OptimalProposal(double s);

// U(s) = u(OptimalProposal(s)).
double IndirectUtility(double s, const ProposerPreferences& prefs);

// Whether pooling all types is optimal. Requires E[theta] < 1/2.
bool NoInfoOptimal(const TypeDistribution& d, const ProposerPreferences& prefs);

// Point t in [0, 1/2] where the line from (s, -c(1)) touches the concave
// branch of U; 1/2 when the line reaches the corner first. s <= 0.
double TangencyPoint(double s, const ProposerPreferences& prefs);

// Cutoff s* and s^* = E[theta | theta >= s*] of the optimal binary signal.
// Continuous distributions only; requires NoInfoOptimal to be false.
Cutoff SolveCutoff(const TypeDistribution& d, const ProposerPreferences& prefs);

SolveOutcome SolvePersuasionFirst(const TypeDistribution& d,
                                  const ProposerPreferences& prefs);

// Fixes the proposal first and pairs it with its best experiment, then
// optimizes over the proposal.
SolveOutcome SolveProposalFirst(const TypeDistribution& d,
                                const ProposerPreferences& prefs);

bool FullInfoOptimal(const TypeDistribution& d,
                     const ProposerPreferences& prefs);

// Proposer's expected payoff when the experiment e is run and the proposal
// is chosen after the signal.
double PayoffOfExperiment(const TypeDistribution& d,
                          const ProposerPreferences& prefs,
                          const Experiment& e);

}  // namespace vps::quad

#endif  // VPS_QUADRATIC_SOLVER_HPP_
