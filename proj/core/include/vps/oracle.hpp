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

#ifndef VPS_ORACLE_HPP_
#define VPS_ORACLE_HPP_

#include <array>
#include <vector>

#include "vps/distribution.hpp"
#include "vps/linear_solver.hpp"
#include "vps/preferences.hpp"
#include "vps/vetoer.hpp"

// Brute-force verifiers. Nothing here calls the trusted solvers' numerics;
// masses, conditional means and payoffs are recomputed from scratch.
namespace vps::oracle {

struct PartitionResult {
  double value;
  std::vector<double> cutoffs;
};

// Exhaustive search over interval partitions with at most k_max cells whose
// cutoffs lie on a grid_n-point grid of the support.
PartitionResult PartitionSearch(const TypeDistribution& d,
                                const ProposerPreferences& prefs, int k_max,
                                int grid_n);

struct CertificateResult {
  bool ok;
  double max_violation;
  double contact_gap;
  double mean_gap;
};

// Checks that the price function max{-c(1), chord through (s*, U(s*)) and
// (s^*, U(s^*))} majorizes U on a grid, touches U at both points, and that
// s^* is the conditional mean above s*.
CertificateResult VerifyCertificate(const TypeDistribution& d,
                                    const ProposerPreferences& prefs,
                                    double s_star, double s_upper,
                                    int grid_n = 2000);

// Same check for pooling: the tangent to U at the prior mean must majorize U
// on the support.
CertificateResult VerifyNoInfoCertificate(const TypeDistribution& d,
                                          const ProposerPreferences& prefs,
                                          int grid_n = 2000);

// Envelope value at every input point, from the best chord over all pairs.
std::vector<linear::Point> ConcaveEnvelopeOracle(
    const std::vector<linear::Point>& points);

struct Split {
  double value;
  double mu_lo;
  double mu_hi;
};

// Best chord through two input points bracketing mu0; ties go to the
// narrowest pair.
Split PairwiseBestSplit(const std::vector<linear::Point>& points, double mu0);

struct BinarySignalResult {
  double value;
  // P(signal 1 | theta) for theta = 0, low, high; signal 1 carries the
  // higher proposal.
  std::array<double, 3> sigma;
};

// Unrestricted two-signal search for types (0, low, high) with prior masses
// (mu_zero, mu_low, rest): grid_n^3 grid, then golden-section refinement.
BinarySignalResult BinarySignalSearchAtoms(double mu_zero, double mu_low,
                                           double low, double high,
                                           const ProposerPreferences& prefs,
                                           int grid_n);

// Lower bound on the three-type persuasion-first value: best split of the
// prior over at most three beliefs on a simplex grid of step 1/n.
double ThreeTypePersuasionGrid(double mu_zero, double mu_low, double low,
                               double high, const ProposerPreferences& prefs,
                               int n);

struct GridMax {
  double p;
  double value;
};

GridMax ProposalFirstGrid(const BinaryTypeEnv& env,
                          const ProposerPreferences& prefs, int grid_n);

}  // namespace vps::oracle

#endif  // VPS_ORACLE_HPP_
