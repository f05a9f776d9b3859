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

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "../support/generators.hpp"
#include "deepvqe/effective_model.hpp"
#include "deepvqe/eigensolvers.hpp"
#include "deepvqe/errors.hpp"
#include "deepvqe/models.hpp"

namespace deepvqe {
namespace {

using testing::eigenvalues;
using testing::Gen;

Matrix pauli(const char* s) { return to_dense(PauliSum(PauliString::parse(s))); }

double spectral(const Matrix& m) {
  return Eigen::JacobiSVD<Matrix>(m).singularValues()(0);
}

// Full local basis: the identity plus every Pauli string on a subsystem.
ExcitationSet full_set(std::size_t n) {
  ExcitationSet e;
  e.n_qubits = n;
  e.kind = "full";
  const std::size_t count = std::size_t{1} << (2 * n);
  for (std::size_t code = 0; code < count; ++code) {
    PauliString s(n);
    for (std::size_t q = 0; q < n; ++q) s.set(q, "IXYZ"[(code >> (2 * q)) & 3]);
    e.operators.emplace_back(s);
    e.labels.push_back(s.str());
  }
  return e;
}

TEST(Effective, DenseMatchesHandAssembly) {
  EffectiveHamiltonian eff;
  eff.constant = 0.5;
  eff.blocks = {pauli("Z"), 0.5 * (pauli("I") + pauli("Z"))};
  eff.couplings.push_back({0, 1, 0.3, pauli("X"), pauli("Y")});
  const Matrix want = 0.5 * Matrix::Identity(4, 4) + kron(pauli("Z"), pauli("I")) +
                      kron(pauli("I"), eff.blocks[1]) + 0.3 * kron(pauli("X"), pauli("Y"));
  EXPECT_NEAR((eff.dense() - want).norm(), 0.0, 1e-15);
  EXPECT_EQ(eff.dimension(), 4u);
  EXPECT_NO_THROW(eff.validate());
}

TEST(Effective, ValidationErrors) {
  EffectiveHamiltonian eff;
  eff.blocks = {pauli("Z"), pauli("Z")};
  eff.couplings.push_back({0, 1, 1.0, pauli("X"), Matrix::Identity(3, 3)});
  EXPECT_THROW(eff.validate(), DimensionError);
  eff.couplings = {{1, 3, 1.0, pauli("X"), pauli("X")}};
  EXPECT_THROW(eff.validate(), DimensionError);
  eff.couplings.clear();
  eff.blocks[0](0, 1) = 0.1;
  EXPECT_THROW(eff.validate(), HermiticityError);
}

TEST(Effective, FullBasisReproducesSpectrum) {
  // With the complete Pauli set the restricted space is the whole register.
  Gen g(61);
  for (int t = 0; t < 5; ++t) {
    const Partition p = Partition::uniform(2, 1 + g.index(2));
    PauliSum h = g.pauli_sum(p.n_total(), 12, true);
    const SplitHamiltonian split = split_hamiltonian(h, p);
    std::vector<LocalBasis> bases;
    for (std::size_t i = 0; i < 2; ++i) {
      ExcitationSet e = full_set(p.size(i));
      e.subsystem = i;
      const StateVector ref(p.size(i), g.state(std::size_t{1} << p.size(i)));
      bases.push_back(build_local_basis(ref, e));
      EXPECT_EQ(bases.back().K, std::size_t{1} << p.size(i));
    }
    const EffectiveHamiltonian eff = assemble_effective(p, bases, split);
    const auto a = eigenvalues(eff.dense());
    const auto b = eigenvalues(to_dense(h));
    for (std::size_t k = 0; k < a.size(); ++k) EXPECT_NEAR(a[k], b[k], 1e-9);
  }
}

TEST(Effective, ElementMethodsAssembleTheSameModel) {
  const Partition p = Partition::uniform(2, 3);
  const SplitHamiltonian split = heisenberg_chain(6, p);
  std::vector<LocalBasis> bases;
  for (std::size_t i = 0; i < 2; ++i) {
    ExactOptions opt;
    opt.want_vectors = true;
    const StateVector ref(3, exact_spectrum(split.intra[i], 1, opt).eigenvectors[0]);
    bases.push_back(build_local_basis(ref, spin_excitation_set(SpinSet::W1, p, i)));
  }
  const Matrix a = assemble_effective(p, bases, split, ElementMethod::PauliExpansion).dense();
  const Matrix b = assemble_effective(p, bases, split, ElementMethod::StateProjection).dense();
  EXPECT_NEAR((a - b).norm(), 0.0, 1e-10);
}

TEST(Effective, ExtensivenessHandSum) {
  Gen g(62);
  const EffectiveHamiltonian eff = g.effective_model();
  for (std::size_t i = 0; i < eff.subsystem_count(); ++i) {
    double want = spectral(eff.blocks[i]);
    for (const auto& c : eff.couplings) {
      if (c.i == i || c.j == i) want += std::abs(c.nu) * spectral(c.V) * spectral(c.W);
    }
    EXPECT_NEAR(extensiveness(eff, i), want, 1e-10);
  }
}

TEST(Effective, PenaltyModes) {
  Gen g(63);
  const EffectiveHamiltonian eff = g.effective_model();
  const PenaltyVector ground = penalty_bounds(eff, 0, 0.0, PenaltyMode::Ground);
  const PenaltyVector excited = penalty_bounds(eff, 0, 0.0, PenaltyMode::Excited);
  EXPECT_EQ(ground.lambda, excited.lambda);
  const PenaltyVector gapped = penalty_bounds(eff, 1, 0.5, PenaltyMode::Excited);
  double total = 0.0;
  for (std::size_t i = 0; i < eff.subsystem_count(); ++i) total += extensiveness(eff, i);
  const PenaltyVector all = penalty_bounds(eff, 0, 0.0, PenaltyMode::Unconditional);
  for (std::size_t i = 0; i < eff.subsystem_count(); ++i) {
    const double e = extensiveness(eff, i);
    EXPECT_GT(ground.lambda[i], e);
    EXPECT_LT(ground.lambda[i], e + 1e-5 * std::max(1.0, e));
    EXPECT_GT(gapped.lambda[i], e + 0.5);
    EXPECT_GT(all.lambda[i], e + 2.0 * total);
  }
  EXPECT_THROW(penalty_bounds(eff, 1, -0.1, PenaltyMode::Excited), PreconditionError);
  EXPECT_EQ(parse_penalty_mode("unconditional"), PenaltyMode::Unconditional);
  EXPECT_EQ(to_string(PenaltyMode::Excited), "excited");
  EXPECT_THROW(parse_penalty_mode("maybe"), PreconditionError);
}

TEST(Effective, EmbeddingMatchesDenseConstruction) {
  Gen g(64);
  for (int t = 0; t < 10; ++t) {
    const EffectiveHamiltonian eff = g.effective_model();
    PenaltyVector pen = zero_penalties(eff);
    for (auto& l : pen.lambda) l = g.uniform(0.0, 3.0);
    EXPECT_NEAR((to_dense(embed_to_qubits(eff, pen)) - embed_dense(eff, pen)).norm(), 0.0, 1e-10);
    EXPECT_TRUE(embed_to_qubits(eff, pen).is_hermitian(1e-10));
  }
}

TEST(Effective, FactoredOperatorMatchesPauliForm) {
  Gen g(70);
  for (int t = 0; t < 10; ++t) {
    const EffectiveHamiltonian eff = g.effective_model();
    PenaltyVector pen = zero_penalties(eff);
    for (auto& l : pen.lambda) l = g.uniform(0.0, 3.0);
    const Matrix dense = to_dense(embed_to_qubits(eff, pen));
    const MatVec op = embedded_operator(eff, pen);
    const Vector v = g.state(static_cast<std::size_t>(dense.rows()));
    Vector out;
    op(v, out);
    EXPECT_NEAR((out - dense * v).norm(), 0.0, 1e-12);
  }
}

TEST(Effective, BlockDecompositionMatchesEmbeddedSpectrum) {
  Gen g(65);
  for (int t = 0; t < 20; ++t) {
    const EffectiveHamiltonian eff = g.effective_model();
    PenaltyVector pen = zero_penalties(eff);
    for (auto& l : pen.lambda) l = g.uniform(0.0, 2.0);
    const auto a = eigenvalues(embed_dense(eff, pen));
    const auto b = block_spectrum_decomposition(eff, pen);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k) EXPECT_NEAR(a[k], b[k], 1e-9);
  }
}

TEST(Effective, ExcitedPenaltyPreservesLowLevels) {
  Gen g(66);
  for (int t = 0; t < 20; ++t) {
    const EffectiveHamiltonian eff = g.effective_model();
    const auto exact = eigenvalues(eff.dense());
    const PenaltyVector pen = penalty_bounds(eff, 1, exact[1] - exact[0], PenaltyMode::Excited);
    const auto emb = eigenvalues(embed_dense(eff, pen));
    EXPECT_NEAR(emb[0], exact[0], 1e-9);
    EXPECT_NEAR(emb[1], exact[1], 1e-9);
  }
}

TEST(Effective, UnpaddedWhenDimensionsArePowersOfTwo) {
  Gen g(67);
  EffectiveHamiltonian eff;
  eff.blocks = {g.hermitian(2), g.hermitian(4)};
  EXPECT_EQ(qubit_padding(eff), (std::vector<std::size_t>{2, 4}));
  EXPECT_EQ(effective_qubits(1), 0u);
  EXPECT_EQ(effective_qubits(3), 2u);
  EXPECT_EQ(effective_qubits(10), 4u);
  const PauliSum q = embed_to_qubits(eff, zero_penalties(eff));
  EXPECT_EQ(q.n_qubits(), 3u);
  EXPECT_NEAR((to_dense(q) - eff.dense()).norm(), 0.0, 1e-12);
}

TEST(Effective, ResourceMetrics) {
  EffectiveHamiltonian eff;
  eff.blocks = {Matrix::Identity(10, 10), Matrix::Identity(10, 10)};
  const ResourceMetrics m = resource_metrics(eff, 4);
  EXPECT_NEAR(m.truncation_rate, 100.0 / 256.0, 1e-15);
  EXPECT_EQ(m.step3_qubits, 8u);
  EXPECT_EQ(m.n_required, 8u);
  eff.blocks = {Matrix::Identity(4, 4), Matrix::Identity(4, 4)};
  const ResourceMetrics w = resource_metrics(eff, 6);
  EXPECT_EQ(w.step3_qubits, 4u);
  EXPECT_EQ(w.n_required, 6u);
}

TEST(Effective, FirstOrderGapExactWithoutCouplings) {
  Gen g(68);
  for (int t = 0; t < 10; ++t) {
    EffectiveHamiltonian eff = g.effective_model();
    eff.couplings.clear();
    const auto exact = eigenvalues(eff.dense());
    EXPECT_NEAR(first_order_gap(eff, 1), exact[1] - exact[0], 1e-10);
  }
}

TEST(Effective, JsonRoundTrip) {
  Gen g(69);
  const EffectiveHamiltonian eff = g.effective_model();
  const nlohmann::json j = eff;
  const auto back = j.get<EffectiveHamiltonian>();
  EXPECT_NEAR((back.dense() - eff.dense()).norm(), 0.0, 1e-15);
  EXPECT_EQ(back.couplings.size(), eff.couplings.size());
}

}  // namespace
}  // namespace deepvqe
