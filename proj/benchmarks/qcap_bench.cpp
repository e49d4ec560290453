// Copyright 2026 The qcap Authors
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

#include "qcap/channel.hpp"
#include "qcap/coherent.hpp"
#include "qcap/families.hpp"
#include "qcap/linalg.hpp"
#include "qcap/random.hpp"

namespace {

using namespace qcap;

void BM_HermitianEig(benchmark::State& state) {
  RandomSource gen(1);
  const Matrix h = gen.hermitian(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(h));
}
BENCHMARK(BM_HermitianEig)->RangeMultiplier(2)->Range(2, 32);

void BM_CoherentInformation(benchmark::State& state) {
  const KrausChannel psi = epolarizing(NoiseParam(0.3));
  const DensityOperator rho = DensityOperator::diagonal_qubit(0.1);
  for (auto _ : state) benchmark::DoNotOptimize(coherent_information(psi, rho));
}
BENCHMARK(BM_CoherentInformation);

void BM_CoherentInformationExtended(benchmark::State& state) {
  const KrausChannel psi = epolarizing(NoiseParam(0.05));
  const DensityOperator rho = DensityOperator::diagonal_qubit(delta_threshold(0.05));
  for (auto _ : state) benchmark::DoNotOptimize(coherent_information_extended(psi, rho));
}
BENCHMARK(BM_CoherentInformationExtended)->Unit(benchmark::kMillisecond);

void BM_MaximizeQubit(benchmark::State& state) {
  const KrausChannel ch = amplitude_damping(NoiseParam(0.3));
  for (auto _ : state) benchmark::DoNotOptimize(maximize_coherent_information(ch));
}
BENCHMARK(BM_MaximizeQubit)->Unit(benchmark::kMillisecond);

void BM_JointIsometryKeep(benchmark::State& state) {
  const Isometry iso = joint_isometry(NoiseParam(0.3));
  const DensityOperator rho = DensityOperator::diagonal_qubit(0.2);
  const std::vector<std::size_t> keep = {kS1, kA};
  for (auto _ : state) benchmark::DoNotOptimize(coherent_information(iso, rho, keep));
}
BENCHMARK(BM_JointIsometryKeep);

}  // namespace

BENCHMARK_MAIN();
