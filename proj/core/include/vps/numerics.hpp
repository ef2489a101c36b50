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

#ifndef VPS_NUMERICS_HPP_
#define VPS_NUMERICS_HPP_

#include <functional>

namespace vps {

using RealFn = std::function<double(double)>;

// Root of f on [lo, hi]; f(lo) and f(hi) must have opposite signs (or one
// is zero). Stops when the bracket is no wider than `tol` or after
// `max_iter` halvings. Returns the midpoint of the final bracket.
double Bisect(const RealFn& f, double lo, double hi, double tol = 0.0,
              int max_iter = 200);

struct Maximum {
  double x;
  double value;
};

// Golden-section search for the maximum of a unimodal f on [lo, hi].
// The endpoints are also evaluated, so a monotone f returns its best end.
Maximum GoldenSectionMax(const RealFn& f, double lo, double hi,
                         double tol = 1e-10);

// Adaptive Simpson quadrature with absolute tolerance `tol`.
double AdaptiveSimpson(const RealFn& f, double lo, double hi,
                       double tol = 1e-10, int max_depth = 50);

}  // namespace vps

#endif  // VPS_NUMERICS_HPP_
