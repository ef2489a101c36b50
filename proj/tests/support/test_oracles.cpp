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

#include "test_oracles.hpp"

#include <algorithm>
#include <cmath>

namespace vps::testing {

double CompositeSimpson(const Fn& f, double a, double b, int n) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double acc = f(a) + f(b);
  for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(a + h * i);
  return acc * h / 3.0;
}

double RootByHalving(const Fn& f, double lo, double hi, int iters) {
  const bool lo_neg = f(lo) < 0.0;
  for (int i = 0; i < iters; ++i) {
    const double mid = 0.5 * (lo + hi);
    if ((f(mid) < 0.0) == lo_neg) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

ArgMax GridArgMax(const Fn& f, double a, double b, int n) {
  ArgMax best{a, f(a)};
  for (int i = 1; i < n; ++i) {
    const double x = a + (b - a) * i / (n - 1);
    const double v = f(x);
    if (v > best.value) best = {x, v};
  }
  return best;
}

double DirectCondMeanAbove(const TypeDistribution& d, double s) {
  if (!d.is_continuous()) {
    double m = 0.0;
    double q = 0.0;
    for (const Atom& a : d.atoms()) {
      if (a.point >= s) {
        m += a.prob;
        q += a.prob * a.point;
      }
    }
    return q / m;
  }
  const double a = std::max(s, d.lower());
  const double mass =
      CompositeSimpson([&](double x) { return d.Density(x); }, a, d.upper());
  const double moment =
      CompositeSimpson([&](double x) { return x * d.Density(x); }, a, d.upper());
  return moment / mass;
}

double Draw(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

TypeDistribution RandomUniform(Rng& rng) {
  return TypeDistribution::Uniform(Draw(rng, -2.0, -0.05), Draw(rng, 0.2, 1.0));
}

TypeDistribution RandomTilt(Rng& rng) {
  return RandomUniform(rng).Tilt(Draw(rng, -1.0, 1.0));
}

TypeDistribution RandomAtoms(Rng& rng) {
  const int n = 2 + static_cast<int>(rng() % 4);
  std::vector<double> pts;
  while (static_cast<int>(pts.size()) < n) {
    const double x = std::round(Draw(rng, -1.0, 1.0) * 1000.0) / 1000.0;
    if (std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(x);
  }
  std::sort(pts.begin(), pts.end());
  if (pts.back() <= 0.0) pts.back() = 0.5;
  std::vector<double> w(n);
  double total = 0.0;
  for (double& x : w) {
    x = Draw(rng, 0.05, 1.0);
    total += x;
  }
  std::vector<Atom> atoms;
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double p = i + 1 < n ? w[i] / total : 1.0 - acc;
    acc += p;
    atoms.push_back({pts[i], p});
  }
  return TypeDistribution::Atoms(atoms);
}

ProposerPreferences RandomPrefs(Rng& rng) {
  switch (rng() % 3) {
    case 0:
      return ProposerPreferences::Linear();
    case 1:
      return ProposerPreferences::Power(Draw(rng, 1.0, 4.0));
    default:
      return ProposerPreferences::Exponential(Draw(rng, 0.1, 4.0));
  }
}

BinaryTypeEnv RandomEnv(Rng& rng) {
  const double low = Draw(rng, 0.0, 0.4);
  const double high = Draw(rng, low + 0.05, 1.0);
  return BinaryTypeEnv(low, high, Draw(rng, 0.0, 1.0));
}

}  // namespace vps::testing
