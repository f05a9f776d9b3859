// Copyright 2026 The deepvqe Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "deepvqe/models.hpp"
#include "deepvqe/statevector.hpp"

namespace {

std::vector<double> angles(std::size_t count) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 6.283185307179586);
  std::vector<double> p(count);
  for (auto& x : p) x = u(rng);
  return p;
}

// Step 1 sized circuits: depth ceil(2.5 n).
void BM_AnsatzForward(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const deepvqe::AnsatzSpec spec{n, (5 * n + 1) / 2};
  const auto p = angles(spec.parameter_count());
  for (auto _ : state) benchmark::DoNotOptimize(deepvqe::run_ansatz(spec, p));
}
BENCHMARK(BM_AnsatzForward)->Arg(4)->Arg(8)->Arg(12);

void BM_Gradient(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto mode = static_cast<deepvqe::GradientMode>(state.range(1));
  const deepvqe::AnsatzSpec spec{n, (5 * n + 1) / 2};
  const deepvqe::AnsatzObjective obj(spec, deepvqe::heisenberg_hamiltonian(n), {}, {});
  const auto p = angles(spec.parameter_count());
  for (auto _ : state) benchmark::DoNotOptimize(obj.gradient(p, mode));
  state.counters["params"] = static_cast<double>(spec.parameter_count());
}
BENCHMARK(BM_Gradient)
    ->ArgsProduct({{4, 8}, {static_cast<int>(deepvqe::GradientMode::Adjoint),
                            static_cast<int>(deepvqe::GradientMode::ParameterShift)}})
    ->Unit(benchmark::kMillisecond);

}  // namespace
