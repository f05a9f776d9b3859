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
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "../support/generators.hpp"
#include "deepvqe/errors.hpp"
#include "deepvqe/models.hpp"
#include "deepvqe/partition.hpp"

namespace deepvqe {
namespace {

using testing::Gen;

TEST(Partition, UniformAndLabels) {
  const Partition p = Partition::uniform(3, 4);
  EXPECT_EQ(p.n_total(), 12u);
  EXPECT_EQ(p.offset(2), 8u);
  EXPECT_EQ(p.subsystem_of(5), 1u);
  EXPECT_EQ(p.label(), "3x4");
  EXPECT_EQ(Partition({2, 3}).label(), "2+3");
  EXPECT_THROW(Partition({2, 0}), PartitionError);
  EXPECT_THROW(Partition::from_sets(4, {{0, 1}, {3}}), PartitionError);
  EXPECT_EQ(Partition::from_sets(4, {{0, 1}, {2, 3}}), Partition::uniform(2, 2));
  const nlohmann::json j = p;
  EXPECT_EQ(j.get<Partition>(), p);
}

TEST(Partition, SplitReassembleRoundTrip) {
  Gen g(41);
  for (int t = 0; t < 20; ++t) {
    const Partition p({1 + g.index(2), 1 + g.index(2), 1 + g.index(2)});
    PauliSum h(p.n_total());
    for (int k = 0; k < 12; ++k) {
      // Terms touching at most two subsystems.
      const std::size_t a = g.index(p.count());
      const std::size_t b = g.index(p.count());
      PauliString s(p.n_total());
      s.set(p.offset(a) + g.index(p.size(a)), "XYZ"[g.index(3)]);
      s.set(p.offset(b) + g.index(p.size(b)), "XYZ"[g.index(3)]);
      h.add(s, g.uniform());
    }
    h.add(PauliString(p.n_total()), 0.7);
    for (bool merge : {false, true}) {
      const SplitHamiltonian split = split_hamiltonian(h, p, merge);
      EXPECT_NEAR(split.constant.real(), 0.7, 1e-15);
      EXPECT_TRUE(reassemble(split, p).approx_equal(h, 1e-12));
      for (const auto& term : split.inter) EXPECT_LT(term.i, term.j);
    }
  }
}

TEST(Partition, RejectsThreeBodyTerms) {
  PauliSum h(3);
  h.add(PauliString::parse("XYZ"), 1.0);
  EXPECT_THROW(split_hamiltonian(h, Partition::uniform(3, 1)), ArityError);
}

TEST(Heisenberg, TermCountAndSplit) {
  const PauliSum h = heisenberg_hamiltonian(8);
  EXPECT_EQ(h.size(), 21u);
  const SplitHamiltonian s = heisenberg_chain(8, Partition::uniform(2, 4));
  EXPECT_EQ(s.inter.size(), 3u);
  EXPECT_EQ(s.intra[0].size(), 9u);
  for (const auto& t : s.inter) {
    EXPECT_EQ(t.V.terms().begin()->first.str().substr(0, 3), "III");
    EXPECT_EQ(t.W.terms().begin()->first.str().substr(1), "III");
  }
}

TEST(SpinSets, SizesAndLabels) {
  const Partition p = Partition::uniform(3, 4);
  EXPECT_EQ(spin_excitation_set(SpinSet::W1, p, 0).size(), 4u);
  EXPECT_EQ(spin_excitation_set(SpinSet::W1, p, 1).size(), 7u);
  EXPECT_EQ(spin_excitation_set(SpinSet::W2, p, 2).size(), 10u);
  EXPECT_EQ(spin_excitation_set(SpinSet::W, p, 1).size(), 13u);
  const ExcitationSet w1 = spin_excitation_set(SpinSet::W1, p, 1);
  EXPECT_EQ(w1.labels[1], "X5");
  EXPECT_EQ(w1.labels[4], "X8");
  EXPECT_THROW(parse_spin_set("W3"), PreconditionError);
}

TEST(JordanWigner, CanonicalAnticommutation) {
  const std::size_t n = 4;
  for (std::size_t a = 1; a <= n; ++a) {
    for (std::size_t b = 1; b <= n; ++b) {
      const PauliSum ca = ladder_op(a, n, false);
      const PauliSum cb = ladder_op(b, n, false);
      const PauliSum cbd = ladder_op(b, n, true);
      const PauliSum anti = ca * cbd + cbd * ca;
      const PauliSum want = a == b ? PauliSum::identity(n) : PauliSum(n);
      EXPECT_TRUE(anti.approx_equal(want, 1e-14)) << a << "," << b;
      EXPECT_TRUE((ca * cb + cb * ca).approx_equal(PauliSum(n), 1e-14));
    }
  }
}

TEST(JordanWigner, NumberOperatorAndOccupiedState) {
  // c^dagger c = (1 + Z) / 2, so |0> is the occupied state in this convention.
  const PauliSum num = jordan_wigner(FermionTerm{1.0, {{2, true}, {2, false}}, {}}, 3);
  PauliSum want = PauliSum::identity(3, 0.5);
  want.add(PauliString::parse("IZI"), 0.5);
  EXPECT_TRUE(num.approx_equal(want, 1e-14));
}

TEST(JordanWigner, HermitianInputGivesHermitianQubitOperator) {
  Gen g(42);
  for (int t = 0; t < 10; ++t) {
    const auto terms = g.fermion_hamiltonian(4);
    EXPECT_NO_THROW(validate_fermion_terms(terms));
    EXPECT_TRUE(jordan_wigner(terms, 4).is_hermitian(1e-12));
  }
}

TEST(FermionFile, ParseWriteRoundTrip) {
  Gen g(43);
  const auto terms = g.fermion_hamiltonian(3);
  std::stringstream buf;
  buf << "# comment\n\n";
  write_fermion_terms(buf, terms);
  const auto back = parse_fermion_terms(buf);
  EXPECT_EQ(back, terms);
  EXPECT_EQ(mode_count(back), 3u);
}

TEST(FermionFile, Errors) {
  std::stringstream bad_json("{\"re\": 1, \"ops\": [[1,1],[1,0]]}\n{oops\n");
  try {
    parse_fermion_terms(bad_json);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  std::stringstream not_hermitian("{\"re\": 0, \"im\": 1, \"ops\": [[1,1],[1,0]]}\n");
  EXPECT_THROW(parse_fermion_terms(not_hermitian), HermiticityError);
  std::stringstream missing_partner("{\"re\": 1, \"ops\": [[1,1],[2,0]]}\n");
  EXPECT_THROW(parse_fermion_terms(missing_partner), HermiticityError);
  const double pi = std::numbers::pi;
  std::ostringstream momentum;
  momentum.precision(17);
  momentum << "{\"re\": 1, \"ops\": [[1,1],[2,0]], \"k\": [0, " << pi << "]}\n"
           << "{\"re\": 1, \"ops\": [[2,1],[1,0]], \"k\": [" << pi << ", 0]}\n";
  std::stringstream mom(momentum.str());
  EXPECT_THROW(parse_fermion_terms(mom), MomentumError);
  std::ostringstream umklapp;
  umklapp.precision(17);
  umklapp << "{\"re\": 1, \"ops\": [[1,1],[2,0]], \"k\": [" << pi << ", " << -pi << "]}\n"
          << "{\"re\": 1, \"ops\": [[2,1],[1,0]], \"k\": [" << -pi << ", " << pi << "]}\n";
  std::stringstream ok(umklapp.str());
  EXPECT_NO_THROW(parse_fermion_terms(ok));
}

TEST(FermionSets, SizesAndTruncatedOperators) {
  const Partition p = Partition::uniform(2, 3);
  EXPECT_EQ(fermion_excitation_set(FermionSet::Ws, p, 1).size(), 7u);
  EXPECT_EQ(fermion_excitation_set(FermionSet::Wd, p, 1).size(), 16u);
  const ExcitationSet full = fermion_excitation_set(FermionSet::Wd, p, 0, true);
  EXPECT_EQ(full.size(), 22u);
  EXPECT_EQ(full.kind, "Wd+");
  // The truncated operator drops the Z string of earlier subsystems.
  const PauliSum c5 = truncated_ladder_op(5, p, 1, false);
  EXPECT_TRUE(c5.approx_equal(ladder_op(2, 3, false), 1e-15));
  EXPECT_THROW(truncated_ladder_op(2, p, 1, false), SupportError);
}

TEST(FermionSets, MomentumPartition) {
  EXPECT_EQ(momentum_partition(2, 4, 4), Partition::uniform(2, 4));
  EXPECT_THROW(momentum_partition(3, 2, 4), PartitionError);
}

}  // namespace
}  // namespace deepvqe
