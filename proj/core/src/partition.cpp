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

#include "deepvqe/partition.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include <nlohmann/json.hpp>

#include "deepvqe/errors.hpp"

namespace deepvqe {

Partition::Partition(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw PartitionError("a partition needs at least one subsystem");
  for (std::size_t s : sizes_) {
    if (s == 0) throw PartitionError("subsystems must be nonempty");
    offsets_.push_back(n_total_);
    n_total_ += s;
  }
  if (n_total_ > PauliString::kMaxQubits) throw PartitionError("partition exceeds 64 qubits");
}

Partition Partition::from_sets(std::size_t n_total, const std::vector<std::vector<std::size_t>>& sets) {
  std::vector<std::size_t> sizes;
  std::size_t next = 0;
  for (const auto& set : sets) {
    for (std::size_t q : set) {
      if (q != next) {
        throw PartitionError("subsystems must be contiguous, ordered and disjoint (expected qubit " +
                             std::to_string(next + 1) + ", got " + std::to_string(q + 1) + ")");
      }
      ++next;
    }
    sizes.push_back(set.size());
  }
  if (next != n_total) throw PartitionError("subsystems do not cover every qubit");
  return Partition(std::move(sizes));
}

Partition Partition::uniform(std::size_t n_sub, std::size_t n_qubit) {
  return Partition(std::vector<std::size_t>(n_sub, n_qubit));
}

std::vector<std::size_t> Partition::qubits(std::size_t i) const {
  std::vector<std::size_t> out(size(i));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = offset(i) + k;
  return out;
}

std::size_t Partition::subsystem_of(std::size_t qubit) const {
  if (qubit >= n_total_) throw DimensionError("qubit outside the partition");
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), qubit);
  return static_cast<std::size_t>(it - offsets_.begin()) - 1;
}

std::string Partition::label() const {
  if (std::all_of(sizes_.begin(), sizes_.end(), [&](std::size_t s) { return s == sizes_.front(); })) {
    return std::to_string(sizes_.size()) + "x" + std::to_string(sizes_.front());
  }
  std::string out;
  for (std::size_t i = 0; i < sizes_.size(); ++i) out += (i ? "+" : "") + std::to_string(sizes_[i]);
  return out;
}

SplitHamiltonian split_hamiltonian(const PauliSum& h, const Partition& p, bool merge) {
  if (h.n_qubits() != p.n_total()) throw DimensionError("Hamiltonian and partition sizes differ");
  SplitHamiltonian out;
  for (std::size_t i = 0; i < p.count(); ++i) out.intra.emplace_back(p.size(i));
  std::map<std::tuple<std::size_t, std::size_t, PauliString>, PauliSum> merged;
  for (const auto& [s, c] : h.terms()) {
    std::vector<std::size_t> touched;
    for (std::size_t i = 0; i < p.count(); ++i) {
      if (!s.slice(p.offset(i), p.size(i)).is_identity()) touched.push_back(i);
    }
    if (touched.empty()) {
      out.constant += c;
    } else if (touched.size() == 1) {
      const std::size_t i = touched[0];
      out.intra[i].add(s.slice(p.offset(i), p.size(i)), c);
    } else if (touched.size() == 2) {
      const std::size_t i = touched[0];
      const std::size_t j = touched[1];
      const PauliString v = s.slice(p.offset(i), p.size(i));
      const PauliString w = s.slice(p.offset(j), p.size(j));
      if (merge) {
        auto [it, fresh] = merged.try_emplace({i, j, v}, PauliSum(p.size(j)));
        it->second.add(w, c);
      } else {
        out.inter.push_back({i, j, c, PauliSum(v), PauliSum(w)});
      }
    } else {
      throw ArityError("term " + s.str() + " couples " + std::to_string(touched.size()) +
                       " subsystems; only pairwise interactions are supported");
    }
  }
  for (auto& [key, w] : merged) {
    if (w.empty()) continue;
    const auto& [i, j, v] = key;
    if (w.size() == 1) {
      const auto& [ws, wc] = *w.terms().begin();
      out.inter.push_back({i, j, wc, PauliSum(v), PauliSum(ws)});
    } else {
      out.inter.push_back({i, j, 1.0, PauliSum(v), std::move(w)});
    }
  }
  return out;
}

PauliSum reassemble(const SplitHamiltonian& s, const Partition& p) {
  const std::size_t n = p.n_total();
  PauliSum out(n);
  out.add(PauliString(n), s.constant);
  for (std::size_t i = 0; i < s.intra.size(); ++i) out += s.intra[i].embed(n, p.offset(i));
  for (const auto& t : s.inter) {
    out += (t.V.embed(n, p.offset(t.i)) * t.W.embed(n, p.offset(t.j))) * t.nu;
  }
  return out;
}

void to_json(nlohmann::json& j, const Partition& p) { j = {{"sizes", p.sizes()}}; }

void from_json(const nlohmann::json& j, Partition& p) {
  p = Partition(j.at("sizes").get<std::vector<std::size_t>>());
}

}  // namespace deepvqe
