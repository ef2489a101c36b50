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

#ifndef VPS_VETOER_HPP_
#define VPS_VETOER_HPP_

#include <vector>

#include "vps/distribution.hpp"
#include "vps/preferences.hpp"

namespace vps {

// Vetoer's expected payoff from policy a under belief d.
double VetoerValue(double a, const TypeDistribution& d, VetoerLoss loss);

// Quadratic loss: p > 0 is accepted iff p <= 2 E[theta]; p = 0 always is.
bool AcceptsQuadratic(double p, double posterior_mean);

// Two Vetoer types low < high; prior_high is the probability of high.
class BinaryTypeEnv {
 public:
  BinaryTypeEnv(double low, double high, double prior_high);

  double low() const { return low_; }
  double high() const { return high_; }
  double prior_high() const { return prior_high_; }
  // min{2h, 1}, the largest proposal any belief supports.
  double max_proposal() const { return max_proposal_; }

  BinaryTypeEnv WithPrior(double prior_high) const {
    return BinaryTypeEnv(low_, high_, prior_high);
  }

 private:
  double low_;
  double high_;
  double prior_high_;
  double max_proposal_;
};

// Least belief on the high type at which a linear-loss Vetoer accepts p.
// Values <= 0 mean always accepted (minus infinity for p <= low); values
// above 1 mean never accepted. p must lie in [0, 1].
double PhiThreshold(const BinaryTypeEnv& env, double p);

// Highest proposal (capped at 1) accepted at belief mu on the high type.
double PsiCap(const BinaryTypeEnv& env, double mu);

// Highest p in [0, min{2 max_atom, 1}] accepted by a linear-loss Vetoer whose
// belief is the given weighted atoms (weights need not be normalized and
// may be zero). Exact: walks the breakpoints of the piecewise-linear
// acceptance margin.
double HighestAcceptedProposal(const std::vector<Atom>& belief);

// Belief on types (0, low, high) with masses (mu_zero, mu_low, rest).
double ThreeTypeBestProposal(double mu_zero, double mu_low, double low,
                             double high);

}  // namespace vps

#endif  // VPS_VETOER_HPP_
