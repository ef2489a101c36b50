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

#ifndef VPS_EXPERIMENT_HPP_
#define VPS_EXPERIMENT_HPP_

#include <variant>
#include <vector>

namespace vps {

// Partition of the type support into cells [lo, c1), [c1, c2), ..., [ck, hi].
struct IntervalPartition {
  std::vector<double> cutoffs;
};

// likelihood[i][j] = P(signal j | atom i) for a discrete type distribution.
struct SignalMap {
  std::vector<std::vector<double>> likelihood;
};

using Experiment = std::variant<IntervalPartition, SignalMap>;

}  // namespace vps

#endif  // VPS_EXPERIMENT_HPP_
