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

#include "vps/numerics.hpp"

#include <cmath>

#include "vps/error.hpp"

namespace vps {

double Bisect(const RealFn& f, double lo, double hi, double tol,
              int max_iter) {
  double f_lo = f(lo);
  if (f_lo == 0.0) return lo;
  double f_hi = f(hi);
  if (f_hi == 0.0) return hi;
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    throw DomainError("Bisect: no sign change on bracket");
  }
  for (int i = 0; i < max_iter; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi || hi - lo <= tol) break;
    double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

Maximum GoldenSectionMax(const RealFn& f, double lo, double hi, double tol) {
  const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  Maximum best{0.5 * (a + b), f(0.5 * (a + b))};
  for (double x : {lo, hi}) {
    double v = f(x);
    if (v > best.value) best = {x, v};
  }
  return best;
}

namespace {

double SimpsonStep(const RealFn& f, double a, double fa, double b, double fb,
                   double m, double fm, double whole, double tol, int depth) {
  double lm = 0.5 * (a + m);
  double rm = 0.5 * (m + b);
  double flm = f(lm);
  double frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return SimpsonStep(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         SimpsonStep(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double AdaptiveSimpson(const RealFn& f, double lo, double hi, double tol,
                       int max_depth) {
  if (hi <= lo) return 0.0;
  double m = 0.5 * (lo + hi);
  double fa = f(lo);
  double fb = f(hi);
  double fm = f(m);
  double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
  return SimpsonStep(f, lo, fa, hi, fb, m, fm, whole, tol, max_depth);
}

}  // namespace vps
