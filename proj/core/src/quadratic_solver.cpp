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

#include "vps/quadratic_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/special_functions/lambert_w.hpp>

#include "vps/error.hpp"
#include "vps/numerics.hpp"

namespace vps::quad {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kNoInfoSlack = 1e-14;
constexpr double kDegenerateCutoff = 1e-12;
constexpr int kScanPoints = 64;
constexpr int kConvexityGrid = 400;
constexpr double kConvexitySlack = 1e-9;
constexpr double kEmptyCell = 1e-15;

using Family = ProposerPreferences::Family;

SolveOutcome StatusQuoOutcome(const ProposerPreferences& prefs) {
  return {Regime::kStatusQuoOnly, kNaN, kNaN, 0.0, prefs.Utility(0.0), 1.0};
}

SolveOutcome PoolingOutcome(const TypeDistribution& d,
                            const ProposerPreferences& prefs) {
  const double m = d.Mean();
  if (m >= 0.5) {
    return {Regime::kIdealAccepted, d.lower(), m, 1.0, 0.0, 0.0};
  }
  return {Regime::kNoInfo, d.lower(), m, 2.0 * m, prefs.Utility(2.0 * m), 0.0};
}

// Tangency margin: u(2t) - u(0) - 2 u'(2t) (t - s).
double TangencyMargin(double t, double s, const ProposerPreferences& prefs) {
  return prefs.Utility(2.0 * t) - prefs.Utility(0.0) -
         2.0 * prefs.UtilityDeriv(2.0 * t) * (t - s);
}

}  // namespace

std::string RegimeName(Regime r) {
  switch (r) {
    case Regime::kIdealAccepted:
      return "IdealAccepted";
    case Regime::kNoInfo:
      return "NoInfo";
    case Regime::kBinaryCutoff:
      return "BinaryCutoff";
    case Regime::kStatusQuoOnly:
      return "StatusQuoOnly";
  }
  return "Unknown";
}

double OptimalProposal(double s) {
  if (s <= 0.0) return 0.0;
  return std::min(2.0 * s, 1.0);
}

double IndirectUtility(double s, const ProposerPreferences& prefs) {
  return prefs.Utility(OptimalProposal(s));
}

bool NoInfoOptimal(const TypeDistribution& d,
                   const ProposerPreferences& prefs) {
  const double m = d.Mean();
  if (m >= 0.5) throw AssumptionError("no_info_optimal: need E[theta] < 1/2");
  if (!(d.upper() > 0.0)) {
    throw AssumptionError("no_info_optimal: need upper support > 0");
  }
  if (d.lower() >= 0.0) return true;
  if (m <= 0.0) return false;
  const double lhs = 2.0 * prefs.UtilityDeriv(2.0 * m) * (m - d.lower());
  const double rhs = prefs.Utility(2.0 * m) - prefs.Utility(0.0);
  return lhs <= rhs + kNoInfoSlack;
}

double TangencyPoint(double s, const ProposerPreferences& prefs) {
  if (s > 0.0) throw DomainError("tangency: need s <= 0");
  if (TangencyMargin(0.5, s, prefs) <= 0.0) return 0.5;
  if (prefs.family() == Family::kPower && prefs.parameter() == 2.0) {
    // Root in (0, 1) of x^2 - 2(1 - 2s)x + 1, x = 1 - 2t.
    const double b = 1.0 - 2.0 * s;
    const double x = 1.0 / (b + std::sqrt(b * b - 1.0));
    return 0.5 * (1.0 - x);
  }
  if (prefs.family() == Family::kExponential) {
    // v e^{-v} = e^{2 alpha s - 1} with v = 1 + 2 alpha (t - s) > 1.
    const double alpha = prefs.parameter();
    const double arg = -std::exp(2.0 * alpha * s - 1.0);
    double v = 1.0;
    if (arg > -std::exp(-1.0)) v = -boost::math::lambert_wm1(arg);
    return std::clamp(s + (v - 1.0) / (2.0 * alpha), 0.0, 0.5);
  }
  if (s == 0.0) return 0.0;
  return Bisect([&](double t) { return TangencyMargin(t, s, prefs); }, 0.0,
                0.5);
}

Cutoff SolveCutoff(const TypeDistribution& d,
                   const ProposerPreferences& prefs) {
  if (!d.is_continuous()) {
    throw UnsupportedError("solve_cutoff: needs a continuous distribution");
  }
  if (!(d.upper() > 0.0)) {
    throw AssumptionError("solve_cutoff: need upper support > 0");
  }
  const double lo = d.lower();
  if (lo >= 0.0) throw AssumptionError("solve_cutoff: no information is optimal");
  auto z = [&](double s) { return TangencyPoint(s, prefs) - d.CondMeanAbove(s); };
  if (z(0.0) >= 0.0) return {0.0, d.CondMeanAbove(0.0)};
  const double z_lo = z(lo);
  if (z_lo <= 0.0) {
    if (z_lo > -kDegenerateCutoff) return {lo, d.Mean()};
    throw AssumptionError("solve_cutoff: no information is optimal");
  }
  const double s = Bisect(z, lo, 0.0, 0.0, 200);
  return {s, d.CondMeanAbove(s)};
}

SolveOutcome SolvePersuasionFirst(const TypeDistribution& d,
                                  const ProposerPreferences& prefs) {
  if (!(d.upper() > 0.0)) return StatusQuoOutcome(prefs);
  if (d.Mean() >= 0.5 || NoInfoOptimal(d, prefs)) {
    return PoolingOutcome(d, prefs);
  }
  const Cutoff c = SolveCutoff(d, prefs);
  const double veto = d.Cdf(c.s_star);
  const double value = veto * prefs.Utility(0.0) +
                       (1.0 - veto) * IndirectUtility(c.s_upper, prefs);
  return {Regime::kBinaryCutoff, c.s_star, c.s_upper,
          OptimalProposal(c.s_upper), value, veto};
}

namespace {

// Best experiment for a fixed proposal p: the largest upper set of types
// whose conditional mean still reaches p / 2.
class FixedProposal {
 public:
  FixedProposal(const TypeDistribution& d, const ProposerPreferences& prefs)
      : d_(d), prefs_(prefs) {
    const double width = d.upper() - d.lower();
    s_max_ = d.upper() - 1e-9 * width;
  }

  // Cutoff used with proposal p (the bottom of the support when pooling).
  double CutoffFor(double p) const {
    const double target = 0.5 * p;
    if (target <= d_.Mean()) return d_.lower();
    if (target >= d_.upper()) return d_.upper();
    auto f = [&](double s) { return d_.CondMeanAbove(s) - target; };
    if (f(s_max_) <= 0.0) return s_max_;
    return Bisect(f, d_.lower(), s_max_, 0.0, 200);
  }

  double AcceptProb(double p) const {
    const double target = 0.5 * p;
    if (target <= d_.Mean()) return 1.0;
    if (target >= d_.upper()) return 0.0;
    return d_.Survival(CutoffFor(p));
  }

  double Value(double p) const {
    const double q = AcceptProb(p);
    return q * prefs_.Utility(p) + (1.0 - q) * prefs_.Utility(0.0);
  }

  // Sign of dW/dp.
  double Foc(double p) const {
    const double s = CutoffFor(p);
    return prefs_.UtilityDeriv(p) * (p - 2.0 * s) -
           (prefs_.Utility(p) - prefs_.Utility(0.0));
  }

 private:
  const TypeDistribution& d_;
  const ProposerPreferences& prefs_;
  double s_max_;
};

}  // namespace

SolveOutcome SolveProposalFirst(const TypeDistribution& d,
                                const ProposerPreferences& prefs) {
  if (!(d.upper() > 0.0)) return StatusQuoOutcome(prefs);
  const double m = d.Mean();
  if (m >= 0.5) return PoolingOutcome(d, prefs);
  if (!d.is_continuous()) {
    throw UnsupportedError("proposal-first: needs a continuous distribution");
  }
  FixedProposal fp(d, prefs);

  std::vector<double> candidates;
  if (m > 0.0) candidates.push_back(2.0 * m);
  candidates.push_back(1.0);
  const double a = std::max(2.0 * m, 0.0);
  double b = std::min(1.0, 2.0 * d.upper());
  if (b < 1.0) b -= 1e-9 * (b - a);
  if (b > a) {
    double prev_p = a;
    double prev_f = fp.Foc(a);
    for (int k = 1; k <= kScanPoints; ++k) {
      const double p = a + (b - a) * k / kScanPoints;
      const double f = fp.Foc(p);
      if (prev_f > 0.0 && f <= 0.0) {
        candidates.push_back(
            Bisect([&](double x) { return fp.Foc(x); }, prev_p, p, 0.0, 200));
      }
      prev_p = p;
      prev_f = f;
    }
  }

  double best_p = candidates.front();
  double best_w = fp.Value(best_p);
  for (size_t i = 1; i < candidates.size(); ++i) {
    const double w = fp.Value(candidates[i]);
    if (w > best_w) {
      best_w = w;
      best_p = candidates[i];
    }
  }

  if (best_p <= 2.0 * m) return PoolingOutcome(d, prefs);
  const double s = fp.CutoffFor(best_p);
  const double veto = d.Cdf(s);
  return {Regime::kBinaryCutoff, s, d.CondMeanAbove(s), best_p, best_w, veto};
}

bool FullInfoOptimal(const TypeDistribution& d,
                     const ProposerPreferences& prefs) {
  if (d.upper() > 0.5) return false;
  const double lo = d.lower();
  const double step = (d.upper() - lo) / (kConvexityGrid - 1);
  std::vector<double> u(kConvexityGrid);
  for (int i = 0; i < kConvexityGrid; ++i) {
    u[i] = IndirectUtility(lo + step * i, prefs);
  }
  for (int i = 1; i + 1 < kConvexityGrid; ++i) {
    if (u[i - 1] - 2.0 * u[i] + u[i + 1] < -kConvexitySlack) return false;
  }
  return true;
}

double PayoffOfExperiment(const TypeDistribution& d,
                          const ProposerPreferences& prefs,
                          const Experiment& e) {
  if (const auto* part = std::get_if<IntervalPartition>(&e)) {
    std::vector<double> edges{d.lower()};
    for (double c : part->cutoffs) {
      if (c > edges.back() && c <= d.upper()) edges.push_back(c);
    }
    double value = 0.0;
    for (size_t i = 0; i < edges.size(); ++i) {
      const bool last = i + 1 == edges.size();
      const double mass =
          d.Survival(edges[i]) - (last ? 0.0 : d.Survival(edges[i + 1]));
      const double moment =
          d.TailMoment(edges[i]) - (last ? 0.0 : d.TailMoment(edges[i + 1]));
      if (mass <= kEmptyCell) continue;
      value += mass * IndirectUtility(moment / mass, prefs);
    }
    return value;
  }
  const auto& map = std::get<SignalMap>(e);
  const auto& atoms = d.atoms();
  if (map.likelihood.size() != atoms.size()) {
    throw DomainError("signal map: one row per atom required");
  }
  const size_t n_signals = map.likelihood.empty() ? 0 : map.likelihood[0].size();
  for (const auto& row : map.likelihood) {
    double total = 0.0;
    if (row.size() != n_signals) throw DomainError("signal map: ragged rows");
    for (double x : row) {
      if (x < 0.0) throw DomainError("signal map: negative likelihood");
      total += x;
    }
    if (std::fabs(total - 1.0) > 1e-12) {
      throw DomainError("signal map: rows must sum to 1");
    }
  }
  double value = 0.0;
  for (size_t j = 0; j < n_signals; ++j) {
    double mass = 0.0;
    double moment = 0.0;
    for (size_t i = 0; i < atoms.size(); ++i) {
      mass += atoms[i].prob * map.likelihood[i][j];
      moment += atoms[i].prob * map.likelihood[i][j] * atoms[i].point;
    }
    if (mass <= kEmptyCell) continue;
    value += mass * IndirectUtility(moment / mass, prefs);
  }
  return value;
}

}  // namespace vps::quad
