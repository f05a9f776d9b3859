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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "deepvqe/coarse_grain.hpp"
#include "deepvqe/partition.hpp"
#include "deepvqe/pauli.hpp"

namespace deepvqe {

// --- spin chains ------------------------------------------------------------

/// Open antiferromagnetic Heisenberg chain sum_i (XX + YY + ZZ)_{i,i+1}.
PauliSum heisenberg_hamiltonian(std::size_t n_sites);

/// The same chain split by `p`: 3 terms per bond, boundary bonds emitted as
/// three InterTerms (nu = 1, V = A, W = A) for A in {X, Y, Z}.
SplitHamiltonian heisenberg_chain(std::size_t n_sites, const Partition& p);

enum class SpinSet { W, W1, W2 };

SpinSet parse_spin_set(const std::string& s);
std::string to_string(SpinSet k);

/// W: identity plus X, Y, Z on every site. W1: identity plus Paulis on sites
/// adjacent to another subsystem. W2: identity plus Paulis on every site but
/// the last one of the subsystem.
ExcitationSet spin_excitation_set(SpinSet kind, const Partition& p, std::size_t subsystem);

// --- fermions ---------------------------------------------------------------

struct FermionFactor {
  std::size_t mode = 1;  // 1-based
  bool dagger = false;

  friend auto operator<=>(const FermionFactor&, const FermionFactor&) = default;
};

/// coefficient * prod factors, applied right to left as written. `momenta`
/// is empty or carries one crystal-momentum label per factor.
struct FermionTerm {
  cplx coefficient = 0.0;
  std::vector<FermionFactor> factors;
  std::vector<double> momenta;

  friend bool operator==(const FermionTerm&, const FermionTerm&) = default;
};

/// One JSON object per line: {"re","im","ops":[[mode, 1|0], ...], "k":[...]}.
/// Blank lines and lines starting with '#' are skipped. The list is
/// validated before it is returned.
std::vector<FermionTerm> parse_fermion_terms(std::istream& in);
std::vector<FermionTerm> load_fermion_terms(const std::filesystem::path& path);
void write_fermion_terms(std::ostream& out, const std::vector<FermionTerm>& terms);
void save_fermion_terms(const std::filesystem::path& path, const std::vector<FermionTerm>& terms);

/// Throws HermiticityError unless the summed operator equals its adjoint
/// (each term's conjugate appears with the conjugate coefficient), and
/// MomentumError when labelled terms do not conserve momentum modulo 2 pi.
void validate_fermion_terms(const std::vector<FermionTerm>& terms);

/// Largest mode index used.
std::size_t mode_count(const std::vector<FermionTerm>& terms);

/// c_j = (prod_{l<j} Z_l) (X_j - i Y_j) / 2 on `n_modes` qubits, or its adjoint.
PauliSum ladder_op(std::size_t mode, std::size_t n_modes, bool dagger);
PauliSum jordan_wigner(const FermionTerm& t, std::size_t n_modes);
PauliSum jordan_wigner(const std::vector<FermionTerm>& terms, std::size_t n_modes);

/// Ladder operator with the Z string cut to the subsystem, written on the
/// subsystem register. Throws SupportError if `mode` is outside it.
PauliSum truncated_ladder_op(std::size_t mode, const Partition& p, std::size_t subsystem,
                             bool dagger = false);

enum class FermionSet { Ws, Wd };

FermionSet parse_fermion_set(const std::string& s);
std::string to_string(FermionSet k);

/// Ws: {I} and every c'_j, c'_j^dagger in the subsystem (2N + 1 operators).
/// Wd: Ws plus every c'_j^dagger c'_k ((N + 1)^2 operators). With
/// `complete_second_order`, Wd also gets c'_j c'_k and c'_j^dagger c'_k^dagger
/// for j < k.
ExcitationSet fermion_excitation_set(FermionSet kind, const Partition& p, std::size_t subsystem,
                                     bool complete_second_order = false);

/// Qubits ordered by momentum then orbital, cut into blocks of
/// `n_qubit_per_subsystem`. Throws PartitionError if that does not divide
/// n_k * orbitals_per_k.
Partition momentum_partition(std::size_t n_k, std::size_t orbitals_per_k,
                             std::size_t n_qubit_per_subsystem);

}  // namespace deepvqe
