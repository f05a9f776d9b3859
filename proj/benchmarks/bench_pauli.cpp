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

#include "deepvqe/effective_model.hpp"
#include "deepvqe/models.hpp"
#include "deepvqe/pauli.hpp"

namespace {

using deepvqe::Vector;

Vector random_state(std::size_t n) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> d;
  Vector v(static_cast<Eigen::Index>(std::size_t{1} << n));
  for (auto& x : v) x = {d(rng), d(rng)};
  return v.normalized();
}

void BM_HeisenbergApply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const deepvqe::PauliSum h = deepvqe::heisenberg_hamiltonian(n);
  const Vector v = random_state(n);
  Vector out;
  for (auto _ : state) {
    deepvqe::apply(h, v, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(h.size()));
}
BENCHMARK(BM_HeisenbergApply)->Arg(8)->Arg(12)->Arg(16);

void BM_HeisenbergCompiledApply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const deepvqe::CompiledPauliSum h(deepvqe::heisenberg_hamiltonian(n));
  const Vector v = random_state(n);
  Vector out;
  for (auto _ : state) {
    h.apply(v, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_HeisenbergCompiledApply)->Arg(8)->Arg(12)->Arg(16);

// A dense 8-qubit operator: 4^8 Pauli terms sharing 2^8 X-masks.
void BM_DensePauliCompiledApply(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1, 1);
  deepvqe::Matrix m(256, 256);
  for (Eigen::Index r = 0; r < 256; ++r) {
    for (Eigen::Index c = 0; c < 256; ++c) m(r, c) = {u(rng), u(rng)};
  }
  const deepvqe::CompiledPauliSum h(deepvqe::dense_to_pauli_sum(m));
  const Vector v = random_state(8);
  Vector out;
  for (auto _ : state) {
    h.apply(v, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_DensePauliCompiledApply);

void BM_PauliProduct(benchmark::State& state) {
  const deepvqe::PauliSum h = deepvqe::heisenberg_hamiltonian(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(h * h);
}
BENCHMARK(BM_PauliProduct)->Arg(8)->Arg(16);

// Structured versus Pauli-expanded application of a three-subsystem
// effective model with K = 10 on each subsystem (12 qubits).
deepvqe::EffectiveHamiltonian three_block_model() {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1, 1);
  auto herm = [&](Eigen::Index k) {
    deepvqe::Matrix m(k, k);
    for (Eigen::Index r = 0; r < k; ++r) {
      for (Eigen::Index c = 0; c < k; ++c) m(r, c) = {u(rng), u(rng)};
    }
    return deepvqe::Matrix(0.5 * (m + m.adjoint()));
  };
  deepvqe::EffectiveHamiltonian eff;
  eff.blocks = {herm(10), herm(10), herm(10)};
  for (std::size_t i = 0; i < 2; ++i) {
    for (int a = 0; a < 3; ++a) eff.couplings.push_back({i, i + 1, 1.0, herm(10), herm(10)});
  }
  return eff;
}

void BM_EmbeddedFactoredApply(benchmark::State& state) {
  const auto eff = three_block_model();
  const auto op = deepvqe::embedded_operator(eff, deepvqe::zero_penalties(eff));
  const Vector v = random_state(12);
  Vector out;
  for (auto _ : state) {
    op(v, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_EmbeddedFactoredApply);

void BM_EmbeddedPauliApply(benchmark::State& state) {
  const auto eff = three_block_model();
  const deepvqe::CompiledPauliSum op(deepvqe::embed_to_qubits(eff, deepvqe::zero_penalties(eff)));
  const Vector v = random_state(12);
  Vector out;
  for (auto _ : state) {
    op.apply(v, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_EmbeddedPauliApply)->Unit(benchmark::kMillisecond);

}  // namespace
