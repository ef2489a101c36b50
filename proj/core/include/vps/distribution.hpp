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

#ifndef VPS_DISTRIBUTION_HPP_
#define VPS_DISTRIBUTION_HPP_

#include <string>
#include <vector>

namespace vps {

struct Atom {
  double point;
  double prob;
};

// Belief over the Vetoer's bliss point. Either uniform on [lo, hi], a finite
// set of atoms, or an exponential tilt f(x) exp(lambda x) of one of those.
// Immutable after construction.
class TypeDistribution {
 public:
  enum class Kind { kUniform, kAtoms, kTilt };

  static TypeDistribution Uniform(double lo, double hi);
  static TypeDistribution Atoms(std::vector<Atom> atoms);

  // Likelihood-ratio shift by exp(lambda x). Tilting a tilt is rejected.
  TypeDistribution Tilt(double lambda) const;

  Kind kind() const { return kind_; }
  Kind base_kind() const { return base_kind_; }
  double lambda() const { return lambda_; }
  double lower() const { return lo_; }
  double upper() const { return hi_; }
  bool is_continuous() const;
  bool is_uniform() const { return kind_ == Kind::kUniform; }
  // Atoms of a discrete distribution (tilted weights if a tilt).
  const std::vector<Atom>& atoms() const;

  // P(theta <= x).
  double Cdf(double x) const;
  // P(theta >= s); the weak inequality keeps an atom at s.
  double Survival(double s) const;
  // E[theta 1{theta >= s}].
  double TailMoment(double s) const;
  double Mean() const { return mean_; }
  double SecondMoment() const { return second_moment_; }
  double Variance() const { return second_moment_ - mean_ * mean_; }
  // E[theta | theta >= s]. Throws EmptyTailError when P(theta >= s) is
  // numerically zero.
  double CondMeanAbove(double s) const;
  // Density of a continuous distribution; zero off the support.
  double Density(double x) const;

  std::string ToString() const;

 private:
  TypeDistribution() = default;
  double TiltIntegral(double a, double b, int moment) const;
  void CacheMoments();

  Kind kind_ = Kind::kUniform;
  Kind base_kind_ = Kind::kUniform;
  double lo_ = 0.0;
  double hi_ = 0.0;
  double lambda_ = 0.0;
  double norm_ = 1.0;
  double mean_ = 0.0;
  double second_moment_ = 0.0;
  std::vector<Atom> atoms_;
  std::vector<Atom> base_atoms_;
};

}  // namespace vps

#endif  // VPS_DISTRIBUTION_HPP_
