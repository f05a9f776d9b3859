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

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "deepvqe/linalg.hpp"
#include "deepvqe/pauli.hpp"
#include "deepvqe/statevector.hpp"

namespace deepvqe {

/// Ordered excitation operators of one subsystem, written on the subsystem's
/// own register (qubit 0 = first site of the subsystem). operators[0] is the
/// identity.
struct ExcitationSet {
  std::size_t subsystem = 0;
  std::size_t n_qubits = 0;
  std::string kind;
  std::vector<PauliSum> operators;
  std::vector<std::string> labels;  // one per operator

  std::size_t size() const noexcept { return operators.size(); }
  /// Throws PreconditionError if operators[0] is not the identity and
  /// DimensionError if an operator lives on another register size.
  void validate() const;
};

/// How raw matrix elements <psi_m| P_k^dagger A P_l |psi_n> are evaluated.
/// PauliExpansion multiplies out P_k^dagger A P_l and takes a (transition)
/// expectation; StateProjection applies each P_l to the reference once and
/// contracts. Both give the same numbers.
enum class ElementMethod { PauliExpansion, StateProjection };

struct Orthonormalization {
  Matrix S;                   // raw x K
  std::size_t K = 0;
  RealVector gram_eigenvalues;  // ascending
};

/// One subsystem's restricted basis |phi_k> = sum_a S(a, k) P_{a mod |ops|} |psi_{a / |ops|}>.
struct LocalBasis {
  std::size_t subsystem = 0;
  std::vector<StateVector> references;
  ExcitationSet excitations;
  Matrix gram;
  Matrix S;
  std::size_t K = 0;
  double rank_tolerance = 1e-8;

  std::size_t raw_dimension() const noexcept { return references.size() * excitations.size(); }
  std::size_t n_qubits() const noexcept { return excitations.n_qubits; }
};

/// Entry ((m,k),(n,l)) = <psi_m| P_k^dagger P_l |psi_n>, raw index m*|ops| + k.
Matrix gram_matrix(const std::vector<StateVector>& refs, const ExcitationSet& ops);

/// Canonical orthogonalization: G = U diag(g) U^dagger, keep g > tol * max(g),
/// S = U_kept diag(g_kept)^{-1/2}. Throws DegenerateBasisError if nothing is
/// kept and DimensionError for non-hermitian input.
Orthonormalization orthonormalize(const Matrix& G, double tol = 1e-8);

/// Raw (unorthonormalized) matrix of A over the raw basis.
Matrix raw_matrix_elements(const std::vector<StateVector>& refs, const ExcitationSet& ops,
                           const PauliSum& A, ElementMethod method = ElementMethod::StateProjection);

/// K x K matrix <phi_k| A |phi_l>. A must be written on the subsystem register.
Matrix matrix_elements(const std::vector<StateVector>& refs, const ExcitationSet& ops,
                       const Matrix& S, const PauliSum& A,
                       ElementMethod method = ElementMethod::StateProjection);
Matrix matrix_elements(const LocalBasis& basis, const PauliSum& A,
                       ElementMethod method = ElementMethod::StateProjection);

/// The orthonormal basis vectors |phi_k> as columns (dimension x K).
Matrix basis_states(const LocalBasis& basis);

LocalBasis build_local_basis(const StateVector& ref, ExcitationSet ops, double tol = 1e-8);

/// Basis over the union of P_k |psi_m> for M >= 2 references, which must be
/// orthonormal within 1e-8 (PreconditionError otherwise).
LocalBasis multi_state_basis(std::vector<StateVector> refs, ExcitationSet ops, double tol = 1e-8);

/// The part of `global` acting on qubits [offset, offset + size), rewritten on
/// a register of `size` qubits. Throws SupportError if any term acts outside.
PauliSum restrict_to_subsystem(const PauliSum& global, std::size_t offset, std::size_t size);

/// <bra| O |ket> evaluated term by term.
cplx transition_element(const StateVector& bra, const PauliSum& O, const StateVector& ket);

void to_json(nlohmann::json& j, const ExcitationSet& e);
void from_json(const nlohmann::json& j, ExcitationSet& e);
void to_json(nlohmann::json& j, const LocalBasis& b);
/// Restores a basis written by to_json; the Gram matrix is recomputed.
LocalBasis local_basis_from_json(const nlohmann::json& j);

/// Row-major [[re, im], ...] with explicit shape, shared by the JSON writers.
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

}  // namespace deepvqe
