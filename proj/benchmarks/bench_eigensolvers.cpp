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

#include "deepvqe/eigensolvers.hpp"
#include "deepvqe/models.hpp"

namespace {

void BM_LanczosHeisenberg(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const deepvqe::PauliSum h = deepvqe::heisenberg_hamiltonian(n);
  deepvqe::ExactOptions opt;
  opt.dense_limit = 0;
  for (auto _ : state) benchmark::DoNotOptimize(deepvqe::exact_spectrum(h, 2, opt));
}
BENCHMARK(BM_LanczosHeisenberg)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_DenseHeisenberg(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const deepvqe::PauliSum h = deepvqe::heisenberg_hamiltonian(n);
  for (auto _ : state) benchmark::DoNotOptimize(deepvqe::exact_spectrum(h, 2));
}
BENCHMARK(BM_DenseHeisenberg)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace
