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

#ifndef VPS_PREFERENCES_HPP_
#define VPS_PREFERENCES_HPP_

#include <string>

namespace vps {

enum class VetoerLoss { kQuadratic, kAbsolute };

// Proposer loss c over distance from her ideal policy 1, and the induced
// utility u(a) = -c(1 - a) on [0, 1].
class ProposerPreferences {
 public:
  enum class Family { kLinear, kPower, kExponential };

  static ProposerPreferences Linear();
  // c(x) = x^gamma, gamma >= 1.
  static ProposerPreferences Power(double gamma);
  // c(x) = (exp(alpha x) - 1) / alpha; constant absolute risk aversion alpha.
  static ProposerPreferences Exponential(double alpha);

  Family family() const { return family_; }
  double parameter() const { return param_; }

  double Loss(double x) const;
  double LossDeriv(double x) const;
  double Utility(double a) const;
  // Left derivative at a = 1.
  double UtilityDeriv(double a) const;
  // -u''(a) / u'(a).
  double RiskAversion(double a) const;

  std::string ToString() const;

 private:
  ProposerPreferences(Family f, double p) : family_(f), param_(p) {}

  Family family_;
  double param_;
};

}  // namespace vps

#endif  // VPS_PREFERENCES_HPP_
