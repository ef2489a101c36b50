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

#include "vps/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "vps/error.hpp"
#include "vps/numerics.hpp"

namespace vps {
namespace {

constexpr double kProbSumTol = 1e-12;
constexpr double kEmptyTail = 1e-12;
constexpr double kQuadTol = 1e-13;

}  // namespace

TypeDistribution TypeDistribution::Uniform(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw DomainError("uniform: need lo < hi");
  }
  if (!(hi > 0.0)) throw DomainError("uniform: need hi > 0");
  TypeDistribution d;
  d.kind_ = d.base_kind_ = Kind::kUniform;
  d.lo_ = lo;
  d.hi_ = hi;
  d.CacheMoments();
  return d;
}

TypeDistribution TypeDistribution::Atoms(std::vector<Atom> atoms) {
  if (atoms.empty()) throw DomainError("atoms: empty support");
  double total = 0.0;
  for (size_t i = 0; i < atoms.size(); ++i) {
    if (!std::isfinite(atoms[i].point) || !(atoms[i].prob > 0.0)) {
      throw DomainError("atoms: probabilities must be positive");
    }
    if (i > 0 && !(atoms[i].point > atoms[i - 1].point)) {
      throw DomainError("atoms: points must be strictly increasing");
    }
    total += atoms[i].prob;
  }
  if (std::fabs(total - 1.0) > kProbSumTol) {
    throw DomainError("atoms: probabilities must sum to 1");
  }
  TypeDistribution d;
  d.kind_ = d.base_kind_ = Kind::kAtoms;
  d.atoms_ = std::move(atoms);
  d.base_atoms_ = d.atoms_;
  d.lo_ = d.atoms_.front().point;
  d.hi_ = d.atoms_.back().point;
  d.CacheMoments();
  return d;
}

TypeDistribution TypeDistribution::Tilt(double lambda) const {
  if (kind_ == Kind::kTilt) throw DomainError("tilt: base is already a tilt");
  if (!std::isfinite(lambda)) throw DomainError("tilt: lambda must be finite");
  TypeDistribution d = *this;
  d.kind_ = Kind::kTilt;
  d.base_kind_ = kind_;
  d.lambda_ = lambda;
  if (kind_ == Kind::kAtoms) {
    // Weights relative to the top atom keep exp() bounded.
    double total = 0.0;
    for (Atom& a : d.atoms_) {
      a.prob *= std::exp(lambda * (a.point - hi_));
      total += a.prob;
    }
    for (Atom& a : d.atoms_) a.prob /= total;
  } else {
    d.norm_ = 1.0;
    d.norm_ = d.TiltIntegral(lo_, hi_, 0);
  }
  d.CacheMoments();
  return d;
}

bool TypeDistribution::is_continuous() const {
  return kind_ == Kind::kUniform ||
         (kind_ == Kind::kTilt && base_kind_ == Kind::kUniform);
}

const std::vector<Atom>& TypeDistribution::atoms() const {
  if (is_continuous()) throw UnsupportedError("atoms: continuous distribution");
  return atoms_;
}

// Integral of x^moment exp(lambda (x - hi)) / norm over [a, b].
double TypeDistribution::TiltIntegral(double a, double b, int moment) const {
  a = std::max(a, lo_);
  b = std::min(b, hi_);
  if (!(b > a)) return 0.0;
  const double lambda = lambda_;
  const double hi = hi_;
  const double norm = norm_;
  auto f = [=](double x) {
    double w = std::exp(lambda * (x - hi)) / norm;
    return moment == 0 ? w : (moment == 1 ? x * w : x * x * w);
  };
  return AdaptiveSimpson(f, a, b, kQuadTol);
}

void TypeDistribution::CacheMoments() {
  if (is_continuous()) {
    if (kind_ == Kind::kUniform) {
      mean_ = 0.5 * (lo_ + hi_);
      second_moment_ = (lo_ * lo_ + lo_ * hi_ + hi_ * hi_) / 3.0;
    } else {
      mean_ = TiltIntegral(lo_, hi_, 1);
      second_moment_ = TiltIntegral(lo_, hi_, 2);
    }
    return;
  }
  mean_ = 0.0;
  second_moment_ = 0.0;
  for (const Atom& a : atoms_) {
    mean_ += a.prob * a.point;
    second_moment_ += a.prob * a.point * a.point;
  }
}

double TypeDistribution::Cdf(double x) const {
  if (x < lo_) return 0.0;
  if (x >= hi_) return 1.0;
  if (!is_continuous()) {
    double acc = 0.0;
    for (const Atom& a : atoms_) {
      if (a.point <= x) acc += a.prob;
    }
    return std::min(acc, 1.0);
  }
  if (kind_ == Kind::kUniform) return (x - lo_) / (hi_ - lo_);
  return std::clamp(TiltIntegral(lo_, x, 0), 0.0, 1.0);
}

double TypeDistribution::Survival(double s) const {
  if (s <= lo_) return 1.0;
  if (s > hi_) return 0.0;
  if (!is_continuous()) {
    double acc = 0.0;
    for (const Atom& a : atoms_) {
      if (a.point >= s) acc += a.prob;
    }
    return std::min(acc, 1.0);
  }
  if (kind_ == Kind::kUniform) return (hi_ - s) / (hi_ - lo_);
  return std::clamp(TiltIntegral(s, hi_, 0), 0.0, 1.0);
}

double TypeDistribution::TailMoment(double s) const {
  if (s <= lo_) return mean_;
  if (s > hi_) return 0.0;
  if (!is_continuous()) {
    double acc = 0.0;
    for (const Atom& a : atoms_) {
      if (a.point >= s) acc += a.prob * a.point;
    }
    return acc;
  }
  if (kind_ == Kind::kUniform) {
    return 0.5 * (hi_ * hi_ - s * s) / (hi_ - lo_);
  }
  return TiltIntegral(s, hi_, 1);
}

double TypeDistribution::CondMeanAbove(double s) const {
  if (s <= lo_) return mean_;
  if (kind_ == Kind::kUniform) {
    if (s >= hi_) throw EmptyTailError("cond_mean_above: empty upper tail");
    return 0.5 * (s + hi_);
  }
  double surv = Survival(s);
  if (surv <= kEmptyTail) {
    throw EmptyTailError("cond_mean_above: empty upper tail");
  }
  double m = TailMoment(s) / surv;
  // Quadrature noise must not push the mean outside [s, hi].
  return std::clamp(m, std::max(s, lo_), hi_);
}

double TypeDistribution::Density(double x) const {
  if (!is_continuous()) throw UnsupportedError("density: atoms distribution");
  if (x < lo_ || x > hi_) return 0.0;
  if (kind_ == Kind::kUniform) return 1.0 / (hi_ - lo_);
  return std::exp(lambda_ * (x - hi_)) / norm_;
}

std::string TypeDistribution::ToString() const {
  std::ostringstream os;
  os.precision(12);
  auto base = [&](std::ostringstream& o) {
    if (base_kind_ == Kind::kUniform) {
      o << "uniform:" << lo_ << "," << hi_;
    } else {
      o << "atoms:";
      for (size_t i = 0; i < base_atoms_.size(); ++i) {
        if (i) o << ",";
        o << base_atoms_[i].point << ":" << base_atoms_[i].prob;
      }
    }
  };
  if (kind_ == Kind::kTilt) {
    os << "tilt:";
    base(os);
    os << ";" << lambda_;
  } else {
    base(os);
  }
  return os.str();
}

}  // namespace vps
