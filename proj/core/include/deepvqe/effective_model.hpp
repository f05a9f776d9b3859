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

#include "deepvqe/coarse_grain.hpp"
#include "deepvqe/linalg.hpp"
#include "deepvqe/partition.hpp"
#include "deepvqe/pauli.hpp"

namespace deepvqe {

/// nu * V (x) W between subsystems i < j, as K_i x K_i and K_j x K_j matrices.
struct Coupling {
  std::size_t i = 0;
  std::size_t j = 0;
  cplx nu = 1.0;
  Matrix V;
  Matrix W;
};

/// Coarse-grained model: constant + sum_i H_i + sum_c nu_c V_c (x) W_c over
/// the product of the restricted local spaces. Each coupling is stored once;
/// a hermitian input Hamiltonian yields a hermitian model without adding the
/// swapped (j, i) copy.
struct EffectiveHamiltonian {
  cplx constant = 0.0;
  std::vector<Matrix> blocks;
  std::vector<Coupling> couplings;

  std::size_t subsystem_count() const noexcept { return blocks.size(); }
  std::vector<std::size_t> dims() const;
  /// prod_i K_i.
  std::size_t dimension() const;
  /// Dense assembly on the product space, subsystem 0 most significant.
  Matrix dense() const;
  /// Throws DimensionError on shape mismatches and HermiticityError when a
  /// block deviates from hermitian by more than 1e-10.
  void validate() const;
};

/// Projects `h` onto the product of the local bases. `bases[i]` must belong
/// to subsystem i of `p`.
EffectiveHamiltonian assemble_effective(const Partition& p, const std::vector<LocalBasis>& bases,
                                        const SplitHamiltonian& h,
                                        ElementMethod method = ElementMethod::StateProjection);

/// ||H_i||_op + sum over couplings touching i of |nu| ||V||_op ||W||_op.
double extensiveness(const EffectiveHamiltonian& eff, std::size_t i);

enum class PenaltyMode { Ground, Excited, Unconditional };

PenaltyMode parse_penalty_mode(const std::string& s);
std::string to_string(PenaltyMode m);

struct PenaltyVector {
  std::vector<double> lambda;
  std::size_t level = 0;
  double gap_estimate = 0.0;
  PenaltyMode mode = PenaltyMode::Ground;
};

/// Relative margin put on top of every strict lower bound.
inline constexpr double kPenaltyMargin = 1e-6;

/// Ground: lambda_i = e(i). Excited: e(i) + gap_estimate. Unconditional:
/// e(i) + 2 sum_j e(j). Each value is raised by kPenaltyMargin * max(1, |bound|).
/// Throws PreconditionError for a negative gap estimate.
PenaltyVector penalty_bounds(const EffectiveHamiltonian& eff, std::size_t n, double gap_estimate,
                             PenaltyMode mode);

PenaltyVector zero_penalties(const EffectiveHamiltonian& eff);

/// ceil(log2 K); 0 for K = 1.
std::size_t effective_qubits(std::size_t K);

/// Padded dimension of every subsystem: 2^{effective_qubits(K_i)}.
std::vector<std::size_t> qubit_padding(const EffectiveHamiltonian& eff);

/// Qubit Hamiltonian with H_i (+) lambda_i I on the padding, V and W padded
/// with zeros, identity factors spanning the padded spaces.
PauliSum embed_to_qubits(const EffectiveHamiltonian& eff, const PenaltyVector& penalties);

/// Matrix-free form of embed_to_qubits(eff, penalties): the same operator on
/// the same register, applied through its Kronecker factors.
MatVec embedded_operator(const EffectiveHamiltonian& eff, const PenaltyVector& penalties);

/// Dense form of the same construction for arbitrary padded dimensions
/// (`padded` empty means qubit_padding(eff)).
Matrix embed_dense(const EffectiveHamiltonian& eff, const PenaltyVector& penalties,
                   std::vector<std::size_t> padded = {});

/// Union over subsets D of subsystems of Spec(model without D) + sum_{i in D}
/// lambda_i, each repeated prod_{i in D} (padded_i - K_i) times. Sorted
/// ascending.
std::vector<double> block_spectrum_decomposition(const EffectiveHamiltonian& eff,
                                                 const PenaltyVector& penalties,
                                                 std::vector<std::size_t> padded = {});

struct ResourceMetrics {
  double truncation_rate = 0.0;
  std::size_t n_required = 0;
  std::size_t step3_qubits = 0;  // sum_i effective_qubits(K_i)
};

/// TR = prod_i K_i / 2^{N_i}; N_req = max(max_i N_i, sum_i effective_qubits(K_i)).
/// step3_qubits is the second argument of that max alone.
ResourceMetrics resource_metrics(const EffectiveHamiltonian& eff,
                                 const std::vector<std::size_t>& n_qubit_per_subsystem);
ResourceMetrics resource_metrics(const EffectiveHamiltonian& eff, std::size_t n_qubit_per_subsystem);

/// Estimate of E_n - E_0 of the model from the lowest eigenvectors of each
/// block: the model is projected onto the product of block ground states
/// plus every single-block excitation of it, and the gap is read off there.
double first_order_gap(const EffectiveHamiltonian& eff, std::size_t n);

void to_json(nlohmann::json& j, const EffectiveHamiltonian& e);
void from_json(const nlohmann::json& j, EffectiveHamiltonian& e);

}  // namespace deepvqe
