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

#include "deepvqe/models.hpp"

#include "deepvqe/errors.hpp"

namespace deepvqe {

PauliSum heisenberg_hamiltonian(std::size_t n_sites) {
  if (n_sites < 2) throw PreconditionError("a Heisenberg chain needs at least two sites");
  PauliSum h(n_sites);
  for (std::size_t i = 0; i + 1 < n_sites; ++i) {
    for (char a : {'X', 'Y', 'Z'}) {
      PauliString s(n_sites);
      s.set(i, a);
      s.set(i + 1, a);
      h.add(s, 1.0);
    }
  }
  return h;
}

SplitHamiltonian heisenberg_chain(std::size_t n_sites, const Partition& p) {
  if (p.n_total() != n_sites) throw PartitionError("partition does not cover the chain");
  return split_hamiltonian(heisenberg_hamiltonian(n_sites), p, /*merge=*/false);
}

SpinSet parse_spin_set(const std::string& s) {
  if (s == "W") return SpinSet::W;
  if (s == "W1") return SpinSet::W1;
  if (s == "W2") return SpinSet::W2;
  throw PreconditionError("unknown spin excitation set '" + s + "'");
}

std::string to_string(SpinSet k) {
  switch (k) {
    case SpinSet::W: return "W";
    case SpinSet::W1: return "W1";
    case SpinSet::W2: return "W2";
  }
  return "W";
}

ExcitationSet spin_excitation_set(SpinSet kind, const Partition& p, std::size_t subsystem) {
  if (subsystem >= p.count()) throw PartitionError("subsystem index out of range");
  const std::size_t n = p.size(subsystem);
  std::vector<std::size_t> sites;
  switch (kind) {
    case SpinSet::W:
      for (std::size_t q = 0; q < n; ++q) sites.push_back(q);
      break;
    case SpinSet::W1:
      if (subsystem > 0) sites.push_back(0);
      if (subsystem + 1 < p.count() && !(n == 1 && subsystem > 0)) sites.push_back(n - 1);
      break;
    case SpinSet::W2:
      for (std::size_t q = 0; q + 1 < n; ++q) sites.push_back(q);
      break;
  }
  ExcitationSet set;
  set.subsystem = subsystem;
  set.n_qubits = n;
  set.kind = to_string(kind);
  set.operators.push_back(PauliSum::identity(n));
  set.labels.emplace_back("I");
  for (std::size_t q : sites) {
    for (char a : {'X', 'Y', 'Z'}) {
      set.operators.emplace_back(PauliString::single(n, q, a));
      set.labels.push_back(std::string(1, a) + std::to_string(p.offset(subsystem) + q + 1));
    }
  }
  return set;
}

}  // namespace deepvqe
