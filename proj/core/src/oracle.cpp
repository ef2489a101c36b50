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

#include "vps/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "vps/error.hpp"

namespace vps::oracle {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kSimpsonPanels = 16;
constexpr double kCertTol = 1e-9;

double OwnUtility(const ProposerPreferences& prefs, double a) {
  return -prefs.Loss(1.0 - a);
}

// Receiver accepts 2s when s > 0 (never more than 1); otherwise 0.
double OwnIndirect(const ProposerPreferences& prefs, double s) {
  const double p = s <= 0.0 ? 0.0 : std::min(2.0 * s, 1.0);
  return OwnUtility(prefs, p);
}

// Composite Simpson of x^k f(x) on [a, b].
double Simpson(const TypeDistribution& d, double a, double b, int k,
               int panels) {
  if (!(b > a)) return 0.0;
  const int n = 2 * panels;
  const double h = (b - a) / n;
  double acc = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double x = i == n ? b : a + h * i;
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    acc += w * d.Density(x) * (k == 0 ? 1.0 : x);
  }
  return acc * h / 3.0;
}

// Mass and first moment of [x_i, x_{i+1}) for a grid over the support; for
// atoms the cell holds the atoms with x_i <= point < x_{i+1}.
void PrefixSums(const TypeDistribution& d, const std::vector<double>& x,
                std::vector<double>* mass, std::vector<double>* moment) {
  const size_t n = x.size();
  mass->assign(n + 1, 0.0);
  moment->assign(n + 1, 0.0);
  if (d.is_continuous()) {
    for (size_t i = 0; i + 1 < n; ++i) {
      (*mass)[i + 1] = (*mass)[i] + Simpson(d, x[i], x[i + 1], 0, kSimpsonPanels);
      (*moment)[i + 1] =
          (*moment)[i] + Simpson(d, x[i], x[i + 1], 1, kSimpsonPanels);
    }
    (*mass)[n] = (*mass)[n - 1];
    (*moment)[n] = (*moment)[n - 1];
    return;
  }
  for (size_t i = 0; i < n; ++i) {
    double m = 0.0;
    double q = 0.0;
    const double right = i + 1 < n ? x[i + 1] : kInf;
    for (const Atom& a : d.atoms()) {
      if (a.point >= x[i] && a.point < right) {
        m += a.prob;
        q += a.prob * a.point;
      }
    }
    (*mass)[i + 1] = (*mass)[i] + m;
    (*moment)[i + 1] = (*moment)[i] + q;
  }
}

double OwnCondMeanAbove(const TypeDistribution& d, double s) {
  if (d.is_continuous()) {
    const double a = std::max(s, d.lower());
    const int panels = 2000;
    const double m = Simpson(d, a, d.upper(), 0, panels);
    if (!(m > 0.0)) throw EmptyTailError("oracle: empty upper tail");
    return Simpson(d, a, d.upper(), 1, panels) / m;
  }
  double m = 0.0;
  double q = 0.0;
  for (const Atom& a : d.atoms()) {
    if (a.point >= s) {
      m += a.prob;
      q += a.prob * a.point;
    }
  }
  if (!(m > 0.0)) throw EmptyTailError("oracle: empty upper tail");
  return q / m;
}

std::vector<double> SupportGrid(const TypeDistribution& d, int n) {
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) {
    x[i] = d.lower() + (d.upper() - d.lower()) * i / (n - 1);
  }
  x.back() = d.upper();
  return x;
}

double GoldenMax(const std::function<double(double)>& f, double a, double b,
                 double* arg) {
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - r * (b - a);
  double e = a + r * (b - a);
  double fc = f(c);
  double fe = f(e);
  while (b - a > 1e-10) {
    if (fc >= fe) {
      b = e;
      e = c;
      fe = fc;
      c = b - r * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = e;
      fc = fe;
      e = a + r * (b - a);
      fe = f(e);
    }
  }
  *arg = 0.5 * (a + b);
  return f(*arg);
}

}  // namespace

PartitionResult PartitionSearch(const TypeDistribution& d,
                                const ProposerPreferences& prefs, int k_max,
                                int grid_n) {
  if (k_max < 1 || k_max > 3) throw DomainError("partition search: k_max in 1..3");
  if (grid_n < 3 || grid_n > 500) {
    throw DomainError("partition search: grid_n in 3..500");
  }
  const std::vector<double> x = SupportGrid(d, grid_n);
  std::vector<double> mass;
  std::vector<double> moment;
  PrefixSums(d, x, &mass, &moment);
  const int n = grid_n;
  // Cell from grid index i (inclusive) to j (exclusive); j = n is the top.
  auto cell = [&](int i, int j) {
    const double m = mass[j] - mass[i];
    if (m <= 1e-15) return 0.0;
    return m * OwnIndirect(prefs, (moment[j] - moment[i]) / m);
  };

  PartitionResult best{cell(0, n), {}};
  if (k_max >= 2) {
    for (int i = 1; i < n - 1; ++i) {
      const double v = cell(0, i) + cell(i, n);
      if (v > best.value) best = {v, {x[i]}};
    }
  }
  if (k_max >= 3) {
    for (int i = 1; i < n - 1; ++i) {
      const double head = cell(0, i);
      for (int j = i + 1; j < n - 1; ++j) {
        const double v = head + cell(i, j) + cell(j, n);
        if (v > best.value) best = {v, {x[i], x[j]}};
      }
    }
  }
  return best;
}

CertificateResult VerifyCertificate(const TypeDistribution& d,
                                    const ProposerPreferences& prefs,
                                    double s_star, double s_upper,
                                    int grid_n) {
  const double floor = -prefs.Loss(1.0);
  const double u_lo = OwnIndirect(prefs, s_star);
  const double u_hi = OwnIndirect(prefs, s_upper);
  const double slope = (u_hi - u_lo) / (s_upper - s_star);
  auto price = [&](double s) {
    return std::max(floor, u_lo + slope * (s - s_star));
  };
  CertificateResult r{true, -kInf, 0.0, 0.0};
  std::vector<double> grid = SupportGrid(d, grid_n);
  grid.push_back(s_star);
  grid.push_back(s_upper);
  for (double s : grid) {
    r.max_violation = std::max(r.max_violation, OwnIndirect(prefs, s) - price(s));
  }
  r.contact_gap = std::max(std::fabs(price(s_star) - u_lo),
                           std::fabs(price(s_upper) - u_hi));
  r.mean_gap = std::fabs(OwnCondMeanAbove(d, s_star) - s_upper);
  r.ok = r.max_violation <= kCertTol && r.contact_gap <= kCertTol &&
         r.mean_gap <= kCertTol;
  return r;
}

CertificateResult VerifyNoInfoCertificate(const TypeDistribution& d,
                                          const ProposerPreferences& prefs,
                                          int grid_n) {
  const double m = OwnCondMeanAbove(d, d.lower());
  const double a = std::min(2.0 * m, 1.0);
  const double slope = 2.0 * prefs.LossDeriv(1.0 - a);
  const double at_m = OwnIndirect(prefs, m);
  CertificateResult r{true, -kInf, 0.0, 0.0};
  for (double s : SupportGrid(d, grid_n)) {
    const double tangent = at_m + slope * (s - m);
    r.max_violation = std::max(r.max_violation, OwnIndirect(prefs, s) - tangent);
  }
  r.ok = r.max_violation <= kCertTol;
  return r;
}

std::vector<linear::Point> ConcaveEnvelopeOracle(
    const std::vector<linear::Point>& points) {
  std::vector<linear::Point> out;
  out.reserve(points.size());
  for (const linear::Point& q : points) {
    double best = -kInf;
    for (const linear::Point& a : points) {
      if (a.mu > q.mu) continue;
      for (const linear::Point& b : points) {
        if (b.mu < q.mu) continue;
        double v;
        if (b.mu == a.mu) {
          v = std::max(a.value, b.value);
        } else {
          v = a.value + (b.value - a.value) * (q.mu - a.mu) / (b.mu - a.mu);
        }
        best = std::max(best, v);
      }
    }
    out.push_back({q.mu, best});
  }
  return out;
}

Split PairwiseBestSplit(const std::vector<linear::Point>& points, double mu0) {
  Split best{-kInf, 0.0, 0.0};
  for (const linear::Point& a : points) {
    if (a.mu > mu0) continue;
    for (const linear::Point& b : points) {
      if (b.mu < mu0) continue;
      const double v =
          b.mu == a.mu
              ? a.value
              : a.value + (b.value - a.value) * (mu0 - a.mu) / (b.mu - a.mu);
      const bool better = v > best.value + 1e-13;
      const bool tie_narrower = std::fabs(v - best.value) <= 1e-13 &&
                                b.mu - a.mu < best.mu_hi - best.mu_lo;
      if (better || tie_narrower) best = {std::max(v, best.value), a.mu, b.mu};
    }
  }
  return best;
}

namespace {

struct ThreeTypes {
  double prior[3];
  double level[3];
};

double BestProposal(const ThreeTypes& t, double w0, double w1, double w2) {
  const double total = w0 + w1 + w2;
  return ThreeTypeBestProposal(w0 / total, w1 / total, t.level[1], t.level[2]);
}

double TwoSignalValue(const ThreeTypes& t, const ProposerPreferences& prefs,
                      const std::array<double, 3>& sigma, bool* flip) {
  double in[3];
  double out[3];
  double m_in = 0.0;
  double m_out = 0.0;
  for (int i = 0; i < 3; ++i) {
    in[i] = t.prior[i] * sigma[i];
    out[i] = t.prior[i] - in[i];
    m_in += in[i];
    m_out += out[i];
  }
  double v = 0.0;
  double p_in = -1.0;
  double p_out = -1.0;
  if (m_in > 1e-15) {
    p_in = BestProposal(t, in[0], in[1], in[2]);
    v += m_in * OwnUtility(prefs, p_in);
  }
  if (m_out > 1e-15) {
    p_out = BestProposal(t, out[0], out[1], out[2]);
    v += m_out * OwnUtility(prefs, p_out);
  }
  if (flip != nullptr) *flip = p_out > p_in;
  return v;
}

}  // namespace

BinarySignalResult BinarySignalSearchAtoms(double mu_zero, double mu_low,
                                           double low, double high,
                                           const ProposerPreferences& prefs,
                                           int grid_n) {
  if (grid_n < 2 || grid_n > 101) throw DomainError("signal search: grid_n in 2..101");
  const ThreeTypes t{{mu_zero, mu_low, 1.0 - mu_zero - mu_low},
                     {0.0, low, high}};
  const double step = 1.0 / (grid_n - 1);
  BinarySignalResult best{-kInf, {0.0, 0.0, 0.0}};
  for (int i = 0; i < grid_n; ++i) {
    for (int j = 0; j < grid_n; ++j) {
      for (int k = 0; k < grid_n; ++k) {
        const std::array<double, 3> s{i * step, j * step, k * step};
        const double v = TwoSignalValue(t, prefs, s, nullptr);
        if (v > best.value) best = {v, s};
      }
    }
  }
  for (int sweep = 0; sweep < 3; ++sweep) {
    for (int axis = 0; axis < 3; ++axis) {
      std::array<double, 3> s = best.sigma;
      const double a = std::max(0.0, s[axis] - step);
      const double b = std::min(1.0, s[axis] + step);
      double arg = s[axis];
      const double v = GoldenMax(
          [&](double x) {
            std::array<double, 3> y = s;
            y[axis] = x;
            return TwoSignalValue(t, prefs, y, nullptr);
          },
          a, b, &arg);
      if (v > best.value) {
        s[axis] = arg;
        best = {v, s};
      }
    }
  }
  bool flip = false;
  TwoSignalValue(t, prefs, best.sigma, &flip);
  if (flip) {
    for (double& x : best.sigma) x = 1.0 - x;
  }
  return best;
}

double ThreeTypePersuasionGrid(double mu_zero, double mu_low, double low,
                               double high, const ProposerPreferences& prefs,
                               int n) {
  if (n < 1 || n > 40) throw DomainError("persuasion grid: n in 1..40");
  struct Belief {
    double a;
    double b;
    double v;
  };
  std::vector<Belief> pts;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) {
      const double a = static_cast<double>(i) / n;
      const double b = static_cast<double>(j) / n;
      pts.push_back({a, b, OwnUtility(prefs, ThreeTypeBestProposal(a, b, low, high))});
    }
  }
  const double eps = 1e-12;
  double best = OwnUtility(prefs, ThreeTypeBestProposal(mu_zero, mu_low, low, high));
  const size_t m = pts.size();
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      // Segment through i and j.
      const double dx = pts[j].a - pts[i].a;
      const double dy = pts[j].b - pts[i].b;
      const double len2 = dx * dx + dy * dy;
      const double t = ((mu_zero - pts[i].a) * dx + (mu_low - pts[i].b) * dy) / len2;
      const double ex = pts[i].a + t * dx - mu_zero;
      const double ey = pts[i].b + t * dy - mu_low;
      if (t >= -eps && t <= 1.0 + eps && ex * ex + ey * ey <= eps * eps) {
        best = std::max(best, (1.0 - t) * pts[i].v + t * pts[j].v);
      }
      for (size_t k = j + 1; k < m; ++k) {
        const double det = (pts[j].a - pts[i].a) * (pts[k].b - pts[i].b) -
                           (pts[k].a - pts[i].a) * (pts[j].b - pts[i].b);
        if (std::fabs(det) < 1e-14) continue;
        const double la = ((pts[j].b - pts[k].b) * (mu_zero - pts[k].a) +
                           (pts[k].a - pts[j].a) * (mu_low - pts[k].b)) /
                          det;
        const double lb = ((pts[k].b - pts[i].b) * (mu_zero - pts[k].a) +
                           (pts[i].a - pts[k].a) * (mu_low - pts[k].b)) /
                          det;
        const double lc = 1.0 - la - lb;
        if (la < -eps || lb < -eps || lc < -eps) continue;
        best = std::max(best, la * pts[i].v + lb * pts[j].v + lc * pts[k].v);
      }
    }
  }
  return best;
}

GridMax ProposalFirstGrid(const BinaryTypeEnv& env,
                          const ProposerPreferences& prefs, int grid_n) {
  if (grid_n < 2) throw DomainError("proposal grid: grid_n >= 2");
  GridMax best{0.0, -kInf};
  for (int i = 0; i < grid_n; ++i) {
    const double p = env.max_proposal() * i / (grid_n - 1);
    const double v = linear::Utilde(env, prefs, p);
    if (v > best.value) best = {p, v};
  }
  return best;
}

}  // namespace vps::oracle
