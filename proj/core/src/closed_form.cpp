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

#include "vps/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vps/error.hpp"

namespace vps::closed_form {
namespace {

void CheckThetaLo(double theta_lo) {
  if (!(theta_lo >= -2.0 && theta_lo < 0.0)) {
    throw DomainError("closed form: need theta_lo in [-2, 0)");
  }
}

void CheckUniform(const TypeDistribution& d) {
  if (!d.is_uniform()) {
    throw UnsupportedError("closed form: uniform distributions only");
  }
}

}  // namespace

double UNo(double theta_lo) {
  CheckThetaLo(theta_lo);
  return -std::min(theta_lo * theta_lo, 1.0);
}

double UFl1(double theta_lo) {
  CheckThetaLo(theta_lo);
  const double w = 1.0 - theta_lo;
  return -(1.0 / 3.0 - theta_lo) / w - (2.0 / 3.0) / w * (1.0 / 9.0);
}

double UFl2(double theta_lo) {
  CheckThetaLo(theta_lo);
  return -(1.0 / 6.0 - theta_lo) / (1.0 - theta_lo);
}

double UBi(double theta_lo) {
  CheckThetaLo(theta_lo);
  if (theta_lo < -1.0 / 3.0) {
    return (5.0 / 27.0 + theta_lo) / (1.0 - theta_lo);
  }
  return -theta_lo * theta_lo;
}

double Kappa(double theta_hi) {
  if (!(theta_hi > 0.0 && theta_hi <= 1.0)) {
    throw DomainError("kappa: need theta_hi in (0, 1]");
  }
  const double t = theta_hi;
  return -t * t / (2.0 - t + 2.0 * std::sqrt(1.0 - t + t * t));
}

LinearCase LinearCaseUniform(double theta_lo, double theta_hi) {
  if (!(theta_lo < 0.0 && theta_lo < theta_hi && theta_hi > 0.0)) {
    throw DomainError("linear case: need theta_lo < 0 < theta_hi");
  }
  const double width = theta_hi - theta_lo;
  if (theta_hi > 1.0) {
    const double s = std::max(1.0 - theta_hi, theta_lo);
    return {s, std::min(1.0, (2.0 * theta_hi - 1.0) / width)};
  }
  return {0.0, theta_hi / width};
}

LinearCase LinearCaseUniform(const TypeDistribution& d) {
  CheckUniform(d);
  return LinearCaseUniform(d.lower(), d.upper());
}

QuadraticCase QuadraticCaseUniform(double theta_lo, double theta_hi) {
  if (!(theta_lo < theta_hi)) throw DomainError("quadratic case: need lo < hi");
  const double k = Kappa(theta_hi);
  if (theta_lo >= k) {
    return {true, std::numeric_limits<double>::quiet_NaN(),
            std::min(theta_lo + theta_hi, 1.0)};
  }
  return {false, k, k + theta_hi};
}

QuadraticCase QuadraticCaseUniform(const TypeDistribution& d) {
  CheckUniform(d);
  return QuadraticCaseUniform(d.lower(), d.upper());
}

}  // namespace vps::closed_form
