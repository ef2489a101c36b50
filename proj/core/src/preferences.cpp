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
#include <sstream>

#include "vps/error.hpp"

namespace vps {
namespace {

void CheckLossArg(double x) {
  if (!(x >= 0.0)) throw DomainError("loss: argument must be >= 0");
}

void CheckPolicy(double a) {
  if (!(a >= 0.0 && a <= 1.0)) throw DomainError("utility: need a in [0, 1]");
}

}  // namespace

ProposerPreferences ProposerPreferences::Linear() {
  return ProposerPreferences(Family::kLinear, 1.0);
}

ProposerPreferences ProposerPreferences::Power(double gamma) {
  if (!(gamma >= 1.0) || !std::isfinite(gamma)) {
    throw DomainError("power: need gamma >= 1");
  }
  return ProposerPreferences(Family::kPower, gamma);
}

ProposerPreferences ProposerPreferences::Exponential(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("exp: need alpha > 0");
  }
  return ProposerPreferences(Family::kExponential, alpha);
}

double ProposerPreferences::Loss(double x) const {
  CheckLossArg(x);
  switch (family_) {
    case Family::kLinear:
      return x;
    case Family::kPower:
      return std::pow(x, param_);
    case Family::kExponential:
      return std::expm1(param_ * x) / param_;
  }
  return 0.0;
}

double ProposerPreferences::LossDeriv(double x) const {
  CheckLossArg(x);
  switch (family_) {
    case Family::kLinear:
      return 1.0;
    case Family::kPower:
      return param_ == 1.0 ? 1.0 : param_ * std::pow(x, param_ - 1.0);
    case Family::kExponential:
      return std::exp(param_ * x);
  }
  return 0.0;
}

double ProposerPreferences::Utility(double a) const {
  CheckPolicy(a);
  return -Loss(1.0 - a);
}

double ProposerPreferences::UtilityDeriv(double a) const {
  CheckPolicy(a);
  return LossDeriv(1.0 - a);
}

double ProposerPreferences::RiskAversion(double a) const {
  CheckPolicy(a);
  switch (family_) {
    case Family::kLinear:
      return 0.0;
    case Family::kPower:
      if (a >= 1.0) throw DomainError("risk_aversion: singular at a = 1");
      return (param_ - 1.0) / (1.0 - a);
    case Family::kExponential:
      return param_;
  }
  return 0.0;
}

std::string ProposerPreferences::ToString() const {
  std::ostringstream os;
  os.precision(12);
  switch (family_) {
    case Family::kLinear:
      os << "linear";
      break;
    case Family::kPower:
      os << "power:" << param_;
      break;
    case Family::kExponential:
      os << "exp:" << param_;
      break;
  }
  return os.str();
}

}  // namespace vps
