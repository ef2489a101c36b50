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

#ifndef VPS_CLOSED_FORM_HPP_
#define VPS_CLOSED_FORM_HPP_

#include "vps/distribution.hpp"

// Analytic benchmarks for uniform type distributions.
namespace vps::closed_form {

// Proposer payoffs on Uniform(theta_lo, 1) with quadratic loss, for
// theta_lo in [-2, 0): no information, the two fully-revealing benchmarks,
// and the optimal binary cutoff.
double UNo(double theta_lo);
double UFl1(double theta_lo);
double UFl2(double theta_lo);
double UBi(double theta_lo);

// Optimal cutoff for Uniform(theta_lo, theta_hi), quadratic loss,
// theta_hi in (0, 1].
double Kappa(double theta_hi);

struct LinearCase {
  double s_star;
  double accept_prob;
};

// Linear Proposer loss on a uniform prior with theta_lo < 0.
LinearCase LinearCaseUniform(double theta_lo, double theta_hi);
LinearCase LinearCaseUniform(const TypeDistribution& d);

struct QuadraticCase {
  bool no_info;
  double s_star;  // NaN when no_info.
  double proposal;
};

// Quadratic Proposer loss on a uniform prior, theta_hi in (0, 1].
QuadraticCase QuadraticCaseUniform(double theta_lo, double theta_hi);
QuadraticCase QuadraticCaseUniform(const TypeDistribution& d);

}  // namespace vps::closed_form

#endif  // VPS_CLOSED_FORM_HPP_
