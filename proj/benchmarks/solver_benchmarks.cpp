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

#include <benchmark/benchmark.h>

#include "vps/linear_solver.hpp"
#include "vps/oracle.hpp"
#include "vps/quadratic_solver.hpp"

namespace {

using vps::BinaryTypeEnv;
using vps::ProposerPreferences;
using vps::TypeDistribution;

void BM_PersuasionFirstUniform(benchmark::State& state) {
  const auto d = TypeDistribution::Uniform(-1.0, 1.0);
  const auto prefs = ProposerPreferences::Exponential(2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(vps::quad::SolvePersuasionFirst(d, prefs));
  }
}
BENCHMARK(BM_PersuasionFirstUniform);

void BM_PersuasionFirstTilt(benchmark::State& state) {
  const auto d = TypeDistribution::Uniform(-1.0, 1.0).Tilt(1.0);
  const auto prefs = ProposerPreferences::Power(2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(vps::quad::SolvePersuasionFirst(d, prefs));
  }
}
BENCHMARK(BM_PersuasionFirstTilt);

void BM_ProposalFirstUniform(benchmark::State& state) {
  const auto d = TypeDistribution::Uniform(-1.0, 1.0);
  const auto prefs = ProposerPreferences::Power(3.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(vps::quad::SolveProposalFirst(d, prefs));
  }
}
BENCHMARK(BM_ProposalFirstUniform);

void BM_PartitionSearch(benchmark::State& state) {
  const auto d = TypeDistribution::Uniform(-1.0, 1.0);
  const auto prefs = ProposerPreferences::Power(2.0);
  const int k = static_cast<int>(state.range(0));
  const int grid = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(vps::oracle::PartitionSearch(d, prefs, k, grid));
  }
}
BENCHMARK(BM_PartitionSearch)->Args({2, 400})->Args({3, 100})->Args({3, 400});

void BM_ConcavifyBinary(benchmark::State& state) {
  const BinaryTypeEnv env(0.1, 0.7, 0.2);
  const auto prefs = ProposerPreferences::Linear();
  for (auto _ : state) {
    benchmark::DoNotOptimize(vps::linear::SolvePersuasionFirstBinary(env, prefs));
  }
}
BENCHMARK(BM_ConcavifyBinary);

void BM_ProposalFirstBinary(benchmark::State& state) {
  const BinaryTypeEnv env(0.15, 0.7, 0.3);
  const auto prefs = ProposerPreferences::Linear();
  for (auto _ : state) {
    benchmark::DoNotOptimize(vps::linear::SolveProposalFirstBinary(env, prefs));
  }
}
BENCHMARK(BM_ProposalFirstBinary);

void BM_ThreeTypeValues(benchmark::State& state) {
  const auto prefs = ProposerPreferences::Linear();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        vps::linear::ComputeThreeTypeValues(0.7, 0.2, 0.1, 0.5, prefs));
  }
}
BENCHMARK(BM_ThreeTypeValues);

void BM_BinarySignalSearch(benchmark::State& state) {
  const auto prefs = ProposerPreferences::Linear();
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        vps::oracle::BinarySignalSearchAtoms(0.7, 0.2, 0.1, 0.5, prefs, grid));
  }
}
BENCHMARK(BM_BinarySignalSearch)->Arg(21)->Arg(101)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
