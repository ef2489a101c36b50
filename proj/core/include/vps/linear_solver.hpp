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

#ifndef VPS_LINEAR_SOLVER_HPP_
#define VPS_LINEAR_SOLVER_HPP_

#include <vector>

#include "vps/preferences.hpp"
#include "vps/vetoer.hpp"

// Linear-loss Vetoer with two or three bliss-point types.
namespace vps::linear {

struct Point {
  double mu;
  double value;
};

// Upper concave envelope of a finite set of points.
class Envelope {
 public:
  // Points need not be sorted; duplicates in mu keep the largest value.
  explicit Envelope(std::vector<Point> points);

  // Hull vertices, increasing in mu, with collinear points removed.
  const std::vector<Point>& breakpoints() const { return breakpoints_; }
  // Input points lying on the envelope.
  const std::vector<Point>& contact() const { return contact_; }
  double Evaluate(double mu) const;

 private:
  std::vector<Point> breakpoints_;
  std::vector<Point> contact_;
};

struct Support {
  double mu;
  double weight;
};

struct Concavification {
  Envelope envelope;
  double value;
  // One support when mu0 is a contact point, else the two contact points
  // bracketing mu0 with the weights that average to mu0.
  std::vector<Support> supports;
};

Concavification Concavify(const std::vector<Point>& points, double mu0);

// Proposer's payoff at belief mu: u(psi(mu)).
double Uhat(const BinaryTypeEnv& env, const ProposerPreferences& prefs,
            double mu);

// Uhat on n uniform points of [0, 1] plus phi(h), phi(1) and the prior.
std::vector<Point> UhatGrid(const BinaryTypeEnv& env,
                            const ProposerPreferences& prefs, int n = 4001);

enum class BinaryRegime { kNoInfo, kSplit };

struct Posterior {
  double mu;
  double weight;
  double proposal;
};

struct BinarySolveOutcome {
  BinaryRegime regime;
  double value;
  std::vector<Posterior> posteriors;
};

BinarySolveOutcome SolvePersuasionFirstBinary(const BinaryTypeEnv& env,
                                              const ProposerPreferences& prefs);

// Best payoff from committing to proposal p in [0, max_proposal] and then
// choosing the experiment.
double Utilde(const BinaryTypeEnv& env, const ProposerPreferences& prefs,
              double p);

struct ProposalFirstOutcome {
  double proposal;
  double value;
  bool informative;
  std::vector<Posterior> posteriors;
  double veto_prob;
  bool quasiconvex;
  // max of Utilde on the guard grid minus the returned value.
  double grid_gap;
};

ProposalFirstOutcome SolveProposalFirstBinary(const BinaryTypeEnv& env,
                                              const ProposerPreferences& prefs);

// Scans (c(1) - c(1 - p))(p - low)/(p - 2 low) for an interior local maximum
// on p - 2 low in [1e-6, 10 - 2 low]; c is extended to negative arguments as
// an odd function.
bool QuasiconvexityCheck(const ProposerPreferences& prefs, double low);

struct ThreeTypeValues {
  double no_info;
  double full_info;
  double best_binary;
  // Signal "p" sent with prob. 1 by low and high types, sigma by type 0.
  double branch_i_value;
  double branch_i_sigma;
  // Signal "p" sent with prob. 1 by the high type, sigma by the low type.
  double branch_ii_value;
  double branch_ii_sigma;
  int best_branch;
  double best_sigma;
};

// Types (0, low, high) with prior masses (mu_zero, mu_low, rest).
ThreeTypeValues ComputeThreeTypeValues(double mu_zero, double mu_low,
                                       double low, double high,
                                       const ProposerPreferences& prefs);

}  // namespace vps::linear

#endif  // VPS_LINEAR_SOLVER_HPP_
