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

#include "deepvqe/pauli.hpp"

namespace deepvqe {

/// Contiguous split of qubits 0..n_total-1 into ordered blocks.
class Partition {
 public:
  Partition() = default;
  /// Blocks of the given sizes, in order. Throws PartitionError on a zero size.
  explicit Partition(std::vector<std::size_t> sizes);
  /// Explicit qubit sets (0-based); validated to be a contiguous ordered cover.
  static Partition from_sets(std::size_t n_total, const std::vector<std::vector<std::size_t>>& sets);
  static Partition uniform(std::size_t n_sub, std::size_t n_qubit);

  std::size_t n_total() const noexcept { return n_total_; }
  std::size_t count() const noexcept { return sizes_.size(); }
  std::size_t offset(std::size_t i) const { return offsets_.at(i); }
  std::size_t size(std::size_t i) const { return sizes_.at(i); }
  const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }
  std::vector<std::size_t> qubits(std::size_t i) const;
  std::size_t subsystem_of(std::size_t qubit) const;
  /// "2x4" for uniform splits, otherwise sizes joined by '+'.
  std::string label() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::size_t n_total_ = 0;
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> offsets_;
};

/// One factorized inter-subsystem term nu * V (x) W with V on subsystem i and
/// W on subsystem j (i < j), each written on its own subsystem register.
struct InterTerm {
  std::size_t i = 0;
  std::size_t j = 0;
  cplx nu = 1.0;
  PauliSum V;
  PauliSum W;
};

/// H = constant + sum_i H_i + sum_alpha nu_alpha V_alpha (x) W_alpha.
struct SplitHamiltonian {
  cplx constant = 0.0;
  std::vector<PauliSum> intra;  // on subsystem registers
  std::vector<InterTerm> inter;
};

/// Sorts every term of `h` by the subsystems it touches. Terms on two
/// subsystems become InterTerms; when `merge` is set, terms sharing the same
/// (i, j, V) string are summed into one W with nu = 1. Throws ArityError for a
/// term touching three or more subsystems.
SplitHamiltonian split_hamiltonian(const PauliSum& h, const Partition& p, bool merge = true);

/// Inverse of split_hamiltonian.
PauliSum reassemble(const SplitHamiltonian& s, const Partition& p);

void to_json(nlohmann::json& j, const Partition& p);
void from_json(const nlohmann::json& j, Partition& p);

}  // namespace deepvqe
