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

#include "vps/linear_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vps/error.hpp"
#include "vps/numerics.hpp"

namespace vps::linear {
namespace {

constexpr double kCollinearTol = 1e-14;
constexpr double kContactTol = 1e-12;
constexpr int kGuardGrid = 2000;
constexpr int kQuasiconvexGrid = 2000;
constexpr double kGoldenTol = 1e-10;

double Cross(const Point& o, const Point& a, const Point& b) {
  return (a.mu - o.mu) * (b.value - o.value) -
         (a.value - o.value) * (b.mu - o.mu);
}

}  // namespace

Envelope::Envelope(std::vector<Point> points) {
  if (points.size() < 2) throw DomainError("envelope: need at least 2 points");
  std::sort(points.begin(), points.end(), [](const Point& a, const Point& b) {
    return a.mu < b.mu || (a.mu == b.mu && a.value > b.value);
  });
  std::vector<Point> pts;
  for (const Point& p : points) {
    if (pts.empty() || p.mu != pts.back().mu) pts.push_back(p);
  }
  if (pts.size() < 2) throw DomainError("envelope: need 2 distinct points");

  for (const Point& p : pts) {
    while (breakpoints_.size() >= 2 &&
           Cross(breakpoints_[breakpoints_.size() - 2], breakpoints_.back(),
                 p) >= -kCollinearTol) {
      breakpoints_.pop_back();
    }
    breakpoints_.push_back(p);
  }
  for (const Point& p : pts) {
    if (p.value >= Evaluate(p.mu) - kContactTol) contact_.push_back(p);
  }
}

double Envelope::Evaluate(double mu) const {
  const auto& b = breakpoints_;
  if (mu < b.front().mu || mu > b.back().mu) {
    throw DomainError("envelope: argument outside the grid");
  }
  auto it = std::lower_bound(
      b.begin(), b.end(), mu,
      [](const Point& p, double x) { return p.mu < x; });
  if (it == b.begin()) return it->value;
  if (it->mu == mu) return it->value;
  const Point& r = *it;
  const Point& l = *(it - 1);
  return l.value + (r.value - l.value) * (mu - l.mu) / (r.mu - l.mu);
}

Concavification Concavify(const std::vector<Point>& points, double mu0) {
  Envelope env(points);
  const double value = env.Evaluate(mu0);
  const auto& c = env.contact();
  for (const Point& p : c) {
    if (p.mu == mu0) return {env, value, {{mu0, 1.0}}};
  }
  auto up = std::lower_bound(
      c.begin(), c.end(), mu0,
      [](const Point& p, double x) { return p.mu < x; });
  if (up == c.begin() || up == c.end()) {
    throw DomainError("concavify: prior outside the contact range");
  }
  const Point& hi = *up;
  const Point& lo = *(up - 1);
  const double w_hi = (mu0 - lo.mu) / (hi.mu - lo.mu);
  return {env, value, {{lo.mu, 1.0 - w_hi}, {hi.mu, w_hi}}};
}

double Uhat(const BinaryTypeEnv& env, const ProposerPreferences& prefs,
            double mu) {
  return prefs.Utility(PsiCap(env, mu));
}

std::vector<Point> UhatGrid(const BinaryTypeEnv& env,
                            const ProposerPreferences& prefs, int n) {
  if (n < 2) throw DomainError("uhat grid: need n >= 2");
  std::vector<double> mus;
  mus.reserve(n + 3);
  for (int i = 0; i < n; ++i) mus.push_back(static_cast<double>(i) / (n - 1));
  for (double extra : {PhiThreshold(env, env.high()), PhiThreshold(env, 1.0),
                       env.prior_high()}) {
    if (extra >= 0.0 && extra <= 1.0) mus.push_back(extra);
  }
  std::sort(mus.begin(), mus.end());
  mus.erase(std::unique(mus.begin(), mus.end()), mus.end());
  std::vector<Point> pts;
  pts.reserve(mus.size());
  for (double mu : mus) pts.push_back({mu, Uhat(env, prefs, mu)});
  return pts;
}

BinarySolveOutcome SolvePersuasionFirstBinary(
    const BinaryTypeEnv& env, const ProposerPreferences& prefs) {
  const double mu0 = env.prior_high();
  const double phi_h = PhiThreshold(env, env.high());
  auto no_info = [&]() {
    const double p = PsiCap(env, mu0);
    return BinarySolveOutcome{BinaryRegime::kNoInfo, prefs.Utility(p),
                              {{mu0, 1.0, p}}};
  };
  if (mu0 >= std::max(0.0, phi_h)) return no_info();
  const Concavification cav = Concavify(UhatGrid(env, prefs), mu0);
  if (cav.supports.size() == 1) return no_info();
  BinarySolveOutcome out{BinaryRegime::kSplit, cav.value, {}};
  for (const Support& s : cav.supports) {
    out.posteriors.push_back({s.mu, s.weight, PsiCap(env, s.mu)});
  }
  return out;
}

double Utilde(const BinaryTypeEnv& env, const ProposerPreferences& prefs,
              double p) {
  if (!(p >= 0.0 && p <= env.max_proposal())) {
    throw DomainError("utilde: need p in [0, max_proposal]");
  }
  const double mu0 = env.prior_high();
  const double phi = PhiThreshold(env, p);
  if (phi <= mu0) return prefs.Utility(p);
  const double c1 = prefs.Loss(1.0);
  return -c1 + (mu0 / phi) * (c1 - prefs.Loss(1.0 - p));
}

ProposalFirstOutcome SolveProposalFirstBinary(
    const BinaryTypeEnv& env, const ProposerPreferences& prefs) {
  const double mu0 = env.prior_high();
  const double h = env.high();
  const double p_bar = env.max_proposal();
  ProposalFirstOutcome out{};
  out.quasiconvex = QuasiconvexityCheck(prefs, env.low());

  double p;
  if (mu0 >= PhiThreshold(env, p_bar)) {
    p = p_bar;
  } else {
    const double psi0 = PsiCap(env, mu0);
    const bool use_h = mu0 <= PhiThreshold(env, h) &&
                       Utilde(env, prefs, h) >= prefs.Utility(psi0);
    p = use_h ? h : psi0;
  }
  double value = Utilde(env, prefs, p);

  double grid_best_p = 0.0;
  double grid_best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < kGuardGrid; ++i) {
    const double x = p_bar * i / (kGuardGrid - 1);
    const double v = Utilde(env, prefs, x);
    if (v > grid_best) {
      grid_best = v;
      grid_best_p = x;
    }
  }
  out.grid_gap = grid_best - value;
  if (!out.quasiconvex) {
    for (double x : {PsiCap(env, mu0), h, p_bar, grid_best_p}) {
      const double v = Utilde(env, prefs, x);
      if (v > value) {
        value = v;
        p = x;
      }
    }
    out.grid_gap = grid_best - value;
  }

  out.proposal = p;
  out.value = value;
  const double phi = PhiThreshold(env, p);
  out.informative = phi > mu0;
  if (out.informative) {
    const double w = mu0 / phi;
    out.posteriors = {{0.0, 1.0 - w, p}, {phi, w, p}};
    out.veto_prob = 1.0 - w;
  } else {
    out.posteriors = {{mu0, 1.0, p}};
    out.veto_prob = 0.0;
  }
  return out;
}

bool QuasiconvexityCheck(const ProposerPreferences& prefs, double low) {
  if (!(low >= 0.0 && low < 5.0)) throw DomainError("quasiconvexity: bad low");
  const double c1 = prefs.Loss(1.0);
  auto c_ext = [&](double x) {
    return x >= 0.0 ? prefs.Loss(x) : -prefs.Loss(-x);
  };
  const double lo = std::log(1e-6);
  const double hi = std::log(10.0 - 2.0 * low);
  std::vector<double> v(kQuasiconvexGrid);
  for (int i = 0; i < kQuasiconvexGrid; ++i) {
    const double d = std::exp(lo + (hi - lo) * i / (kQuasiconvexGrid - 1));
    const double p = 2.0 * low + d;
    v[i] = (c1 - c_ext(1.0 - p)) * (p - low) / d;
  }
  for (int i = 1; i + 1 < kQuasiconvexGrid; ++i) {
    if (v[i - 1] < v[i] && v[i] > v[i + 1]) return false;
  }
  return true;
}

namespace {

struct ThreeTypePrior {
  double zero;
  double low;
  double high;
};

// Value of the binary experiment sending signal "p" with probability
// sigma[i] from type i; the proposal after each signal is the best one.
double BinaryValue(const ThreeTypePrior& pi, double s0, double sl, double sh,
                   double low, double high, const ProposerPreferences& prefs) {
  const double m_zero = pi.zero * s0;
  const double m_low = pi.low * sl;
  const double m_high = pi.high * sh;
  const double mass = m_zero + m_low + m_high;
  double value = 0.0;
  if (mass > 0.0) {
    const double p =
        ThreeTypeBestProposal(m_zero / mass, m_low / mass, low, high);
    value += mass * prefs.Utility(p);
  }
  const double rest = 1.0 - mass;
  if (rest > 0.0) {
    const double r_zero = pi.zero - m_zero;
    const double r_low = pi.low - m_low;
    const double r_total = r_zero + r_low + (pi.high - m_high);
    if (r_total > 0.0) {
      const double p =
          ThreeTypeBestProposal(r_zero / r_total, r_low / r_total, low, high);
      value += rest * prefs.Utility(p);
    }
  }
  return value;
}

}  // namespace

ThreeTypeValues ComputeThreeTypeValues(double mu_zero, double mu_low,
                                       double low, double high,
                                       const ProposerPreferences& prefs) {
  if (!(low > 0.0 && low < high)) {
    throw DomainError("three types: need 0 < low < high");
  }
  if (!(mu_zero >= 0.0 && mu_low >= 0.0 && mu_zero + mu_low <= 1.0)) {
    throw DomainError("three types: invalid prior");
  }
  const ThreeTypePrior pi{mu_zero, mu_low, 1.0 - mu_zero - mu_low};
  ThreeTypeValues out{};
  out.no_info =
      prefs.Utility(ThreeTypeBestProposal(pi.zero, pi.low, low, high));
  out.full_info =
      pi.zero * prefs.Utility(ThreeTypeBestProposal(1.0, 0.0, low, high)) +
      pi.low * prefs.Utility(ThreeTypeBestProposal(0.0, 1.0, low, high)) +
      pi.high * prefs.Utility(ThreeTypeBestProposal(0.0, 0.0, low, high));

  const double sigma_max =
      pi.zero > 0.0 ? std::min(1.0, (pi.low + pi.high) / pi.zero) : 1.0;
  const Maximum br_i = GoldenSectionMax(
      [&](double s) { return BinaryValue(pi, s, 1.0, 1.0, low, high, prefs); },
      0.0, sigma_max, kGoldenTol);
  const Maximum br_ii = GoldenSectionMax(
      [&](double s) { return BinaryValue(pi, 0.0, s, 1.0, low, high, prefs); },
      0.0, 1.0, kGoldenTol);
  out.branch_i_value = br_i.value;
  out.branch_i_sigma = br_i.x;
  out.branch_ii_value = br_ii.value;
  out.branch_ii_sigma = br_ii.x;
  if (br_ii.value >= br_i.value) {
    out.best_binary = br_ii.value;
    out.best_branch = 2;
    out.best_sigma = br_ii.x;
  } else {
    out.best_binary = br_i.value;
    out.best_branch = 1;
    out.best_sigma = br_i.x;
  }
  return out;
}

}  // namespace vps::linear
