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

#include "vps/vetoer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vps/error.hpp"

namespace vps {
namespace {

constexpr double kMarginTol = 1e-13;

// sum w (|theta| - |p - theta|), normalized by the total weight.
double AcceptanceMargin(const std::vector<Atom>& belief, double total,
                        double p) {
  double g = 0.0;
  for (const Atom& a : belief) {
    g += a.prob * (std::fabs(a.point) - std::fabs(p - a.point));
  }
  return g / total;
}

}  // namespace

double VetoerValue(double a, const TypeDistribution& d, VetoerLoss loss) {
  if (loss == VetoerLoss::kQuadratic) {
    return -(a * a - 2.0 * a * d.Mean() + d.SecondMoment());
  }
  if (d.is_continuous()) {
    throw UnsupportedError(
        "vetoer_value: absolute loss needs a discrete distribution");
  }
  double v = 0.0;
  for (const Atom& at : d.atoms()) v -= at.prob * std::fabs(at.point - a);
  return v;
}

bool AcceptsQuadratic(double p, double posterior_mean) {
  if (p == 0.0) return true;
  return p <= 2.0 * posterior_mean;
}

BinaryTypeEnv::BinaryTypeEnv(double low, double high, double prior_high)
    : low_(low), high_(high), prior_high_(prior_high) {
  if (!(low >= 0.0 && low < high)) {
    throw DomainError("binary env: need 0 <= low < high");
  }
  if (!(high <= 1.0)) throw DomainError("binary env: need high <= 1");
  if (!(prior_high >= 0.0 && prior_high <= 1.0)) {
    throw DomainError("binary env: prior must lie in [0, 1]");
  }
  max_proposal_ = std::min(2.0 * high, 1.0);
}

double PhiThreshold(const BinaryTypeEnv& env, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("phi: need p in [0, 1]");
  const double l = env.low();
  if (p == 2.0 * l) return 0.0;
  if (p <= l) return -std::numeric_limits<double>::infinity();
  return (p - 2.0 * l) / (2.0 * (std::min(p, env.high()) - l));
}

double PsiCap(const BinaryTypeEnv& env, double mu) {
  if (!(mu >= 0.0 && mu <= 1.0)) throw DomainError("psi: need mu in [0, 1]");
  const double l = env.low();
  const double h = env.high();
  const double phi_h = (h - 2.0 * l) / (2.0 * (h - l));
  if (mu >= (1.0 - 2.0 * l) / (2.0 * (h - l))) return 1.0;
  double p;
  if (phi_h > 0.0 && mu < phi_h) {
    p = 2.0 * l * (1.0 - mu) / (1.0 - 2.0 * mu);
  } else {
    p = 2.0 * ((1.0 - mu) * l + mu * h);
  }
  return std::min(p, 1.0);
}

double HighestAcceptedProposal(const std::vector<Atom>& belief) {
  double total = 0.0;
  double top = -std::numeric_limits<double>::infinity();
  for (const Atom& a : belief) {
    if (a.prob < 0.0) throw DomainError("belief: negative weight");
    total += a.prob;
    if (a.prob > 0.0) top = std::max(top, a.point);
  }
  if (!(total > 0.0)) throw DomainError("belief: zero total weight");
  const double cap = std::min(2.0 * top, 1.0);
  if (!(cap > 0.0)) return 0.0;

  std::vector<double> knots{0.0};
  for (const Atom& a : belief) {
    if (a.prob > 0.0 && a.point > 0.0 && a.point < cap) {
      knots.push_back(a.point);
    }
  }
  knots.push_back(cap);
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

  // The margin is concave with g(0) = 0, so the accepted set is [0, p_max].
  size_t last = 0;
  for (size_t i = 1; i < knots.size(); ++i) {
    if (AcceptanceMargin(belief, total, knots[i]) >= -kMarginTol) last = i;
  }
  if (last + 1 == knots.size()) return cap;
  const double a = knots[last];
  const double b = knots[last + 1];
  const double ga = AcceptanceMargin(belief, total, a);
  const double gb = AcceptanceMargin(belief, total, b);
  if (ga <= 0.0) return a;
  return a + ga * (b - a) / (ga - gb);
}

double ThreeTypeBestProposal(double mu_zero, double mu_low, double low,
                             double high) {
  if (!(low >= 0.0 && low < high)) {
    throw DomainError("three types: need 0 <= low < high");
  }
  if (!(mu_zero >= 0.0 && mu_low >= 0.0 && mu_zero + mu_low <= 1.0 + 1e-12)) {
    throw DomainError("three types: invalid belief");
  }
  const double mu_high = std::max(0.0, 1.0 - mu_zero - mu_low);
  return HighestAcceptedProposal(
      {{0.0, mu_zero}, {low, mu_low}, {high, mu_high}});
}

}  // namespace vps
