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

#include <gtest/gtest.h>

#include <cmath>

#include <nlohmann/json.hpp>

#include "../support/generators.hpp"
#include "deepvqe/eigensolvers.hpp"
#include "deepvqe/errors.hpp"
#include "deepvqe/models.hpp"

namespace deepvqe {
namespace {

using testing::eigenvalues;
using testing::Gen;

TEST(ExactSpectrum, DenseAgreesWithEigen) {
  Gen g(31);
  const PauliSum h = g.pauli_sum(4, 15, true);
  const auto want = eigenvalues(to_dense(h));
  const SpectrumResult r = exact_spectrum(h, 5);
  EXPECT_EQ(r.method, SpectrumMethod::Dense);
  for (std::size_t k = 0; k < 5; ++k) EXPECT_NEAR(r.eigenvalues[k], want[k], 1e-10);
}

TEST(ExactSpectrum, LanczosAgreesWithDense) {
  Gen g(32);
  for (int t = 0; t < 3; ++t) {
    const PauliSum h = g.pauli_sum(8, 40, true);
    const auto want = eigenvalues(to_dense(h));
    ExactOptions opt;
    opt.dense_limit = 4;
    opt.want_vectors = true;
    const SpectrumResult r = exact_spectrum(h, 3, opt);
    EXPECT_EQ(r.method, SpectrumMethod::Lanczos);
    for (std::size_t k = 0; k < 3; ++k) {
      EXPECT_NEAR(r.eigenvalues[k], want[k], 1e-8);
      Vector hv;
      apply(h, r.eigenvectors[k], hv);
      EXPECT_LT((hv - r.eigenvalues[k] * r.eigenvectors[k]).norm(), 1e-7);
    }
  }
}

TEST(ExactSpectrum, LanczosResolvesDegenerateTriplet) {
  // Open 6-site chain: singlet ground state, threefold first excited level.
  const PauliSum h = heisenberg_hamiltonian(6);
  const auto want = eigenvalues(to_dense(h));
  ExactOptions opt;
  opt.dense_limit = 3;
  const SpectrumResult r = exact_spectrum(h, 4, opt);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(r.eigenvalues[k], want[k], 1e-8);
  EXPECT_NEAR(r.eigenvalues[1], r.eigenvalues[3], 1e-8);
}

TEST(ExactSpectrum, HeisenbergClosedForms) {
  // Two sites: singlet at -3. Four sites: -(3 + 2 sqrt 3).
  EXPECT_NEAR(exact_spectrum(heisenberg_hamiltonian(2), 1).eigenvalues[0], -3.0, 1e-12);
  EXPECT_NEAR(exact_spectrum(heisenberg_hamiltonian(4), 1).eigenvalues[0], -3.0 - 2.0 * std::sqrt(3.0), 1e-12);
}

TEST(ExactSpectrum, RejectsNonHermitian) {
  PauliSum h(2);
  h.add(PauliString::parse("XY"), cplx(0, 1));
  EXPECT_THROW(exact_spectrum(h, 1), PreconditionError);
}

TEST(Vqe, ReachesTwoQubitGround) {
  const PauliSum h = heisenberg_hamiltonian(2);
  OptimizerConfig cfg;
  cfg.restarts = 3;
  const VqeResult r = vqe_ground(h, AnsatzSpec{2, 2}, cfg);
  EXPECT_NEAR(r.energy, -3.0, 1e-6);
  EXPECT_NEAR(r.state.norm(), 1.0, 1e-12);
}

TEST(Vqe, VariationalBoundOnRandomModels) {
  Gen g(33);
  for (int t = 0; t < 4; ++t) {
    const PauliSum h = g.pauli_sum(3, 8, true);
    OptimizerConfig cfg;
    cfg.restarts = 2;
    cfg.seed = static_cast<std::uint64_t>(t);
    const VqeResult r = vqe_ground(h, AnsatzSpec{3, 3}, cfg);
    EXPECT_GE(r.energy, exact_spectrum(h, 1).eigenvalues[0] - 1e-9);
  }
}

TEST(Ssvqe, FindsTwoLowestLevels) {
  Gen g(34);
  const PauliSum h = g.pauli_sum(2, 8, true);
  const auto want = exact_spectrum(h, 2).eigenvalues;
  OptimizerConfig cfg;
  cfg.restarts = 5;
  const SsvqeResult r = ssvqe(h, AnsatzSpec{2, 3}, cfg, SsvqeConfig::two_state(2, 2.0, 1.0));
  ASSERT_EQ(r.levels.size(), 2u);
  EXPECT_NEAR(r.levels[0].energy, want[0], 1e-5);
  EXPECT_NEAR(r.levels[1].energy, want[1], 1e-5);
  EXPECT_NEAR(std::abs(overlap(r.levels[0].state, r.levels[1].state)), 0.0, 1e-12);
}

TEST(Ssvqe, ConfigValidation) {
  SsvqeConfig s = SsvqeConfig::two_state(3, 2.0, 1.0);
  EXPECT_NO_THROW(s.validate(3));
  EXPECT_EQ(s.references[1], "001");
  s.weights = {1.0, 2.0};
  EXPECT_THROW(s.validate(3), PreconditionError);
  s = SsvqeConfig::two_state(3, 2.0, 1.0);
  s.references[1] = "000";
  EXPECT_THROW(s.validate(3), PreconditionError);
  const nlohmann::json j = SsvqeConfig::two_state(2, 7.0, 2.0);
  EXPECT_EQ(j.get<SsvqeConfig>().weights, (std::vector<double>{7.0, 2.0}));
}

TEST(Qse, CompleteOperatorSetGivesFullSpectrum) {
  Gen g(35);
  const PauliSum h = g.pauli_sum(2, 8, true);
  std::vector<PauliSum> ops;
  for (const char* s : {"II", "IX", "IY", "IZ", "XI", "YI", "ZI", "XX", "XY", "XZ", "YX", "YY", "YZ", "ZX", "ZY",
                        "ZZ"}) {
    ops.emplace_back(PauliString::parse(s));
  }
  const SpectrumResult r = qse_spectrum(h, ops, StateVector(2, g.state(4)), 0);
  const auto want = eigenvalues(to_dense(h));
  ASSERT_EQ(r.eigenvalues.size(), 4u);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(r.eigenvalues[k], want[k], 1e-9);
}

TEST(Qse, IdentityOnlyGivesReferenceEnergy) {
  Gen g(36);
  const PauliSum h = g.pauli_sum(3, 8, true);
  const StateVector ref(3, g.state(8));
  const SpectrumResult r = qse_spectrum(h, {PauliSum::identity(3)}, ref, 0);
  ASSERT_EQ(r.eigenvalues.size(), 1u);
  EXPECT_NEAR(r.eigenvalues[0], expectation(ref, h).real(), 1e-12);
}

}  // namespace
}  // namespace deepvqe
