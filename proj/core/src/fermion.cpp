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

#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "deepvqe/errors.hpp"
#include "deepvqe/models.hpp"

namespace deepvqe {

namespace {

std::string describe(const std::vector<FermionFactor>& f) {
  std::string out;
  for (const auto& x : f) {
    if (!out.empty()) out += ' ';
    out += "c" + std::to_string(x.mode) + (x.dagger ? "^" : "");
  }
  return out.empty() ? "1" : out;
}

FermionTerm parse_line(const std::string& line, std::size_t lineno) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), lineno);
  }
  try {
    FermionTerm t;
    t.coefficient = cplx(j.value("re", 0.0), j.value("im", 0.0));
    for (const auto& op : j.at("ops")) {
      if (!op.is_array() || op.size() != 2) throw ParseError("each op must be [mode, 0|1]", lineno);
      const auto mode = op.at(0).get<long long>();
      const auto flag = op.at(1).get<int>();
      if (mode < 1) throw ParseError("mode indices are 1-based", lineno);
      if (flag != 0 && flag != 1) throw ParseError("creation flag must be 0 or 1", lineno);
      t.factors.push_back({static_cast<std::size_t>(mode), flag == 1});
    }
    if (j.contains("k")) {
      t.momenta = j.at("k").get<std::vector<double>>();
      if (t.momenta.size() != t.factors.size()) {
        throw ParseError("need one momentum label per op", lineno);
      }
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), lineno);
  }
}

}  // namespace

std::vector<FermionTerm> parse_fermion_terms(std::istream& in) {
  std::vector<FermionTerm> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(parse_line(line, lineno));
  }
  validate_fermion_terms(out);
  return out;
}

std::vector<FermionTerm> load_fermion_terms(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open fermion term file " + path.string());
  return parse_fermion_terms(in);
}

void write_fermion_terms(std::ostream& out, const std::vector<FermionTerm>& terms) {
  for (const auto& t : terms) {
    nlohmann::json j;
    j["re"] = t.coefficient.real();
    j["im"] = t.coefficient.imag();
    auto ops = nlohmann::json::array();
    for (const auto& f : t.factors) ops.push_back({f.mode, f.dagger ? 1 : 0});
    j["ops"] = std::move(ops);
    if (!t.momenta.empty()) j["k"] = t.momenta;
    out << j.dump() << '\n';
  }
}

void save_fermion_terms(const std::filesystem::path& path, const std::vector<FermionTerm>& terms) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write fermion term file " + path.string());
  write_fermion_terms(out, terms);
  if (!out) throw Error("write failed for " + path.string());
}

void validate_fermion_terms(const std::vector<FermionTerm>& terms) {
  for (const auto& t : terms) {
    if (!t.momenta.empty()) {
      if (t.momenta.size() != t.factors.size()) {
        throw MomentumError("term " + describe(t.factors) + " needs one momentum label per op");
      }
      double net = 0.0;
      for (std::size_t a = 0; a < t.factors.size(); ++a) {
        net += t.factors[a].dagger ? t.momenta[a] : -t.momenta[a];
      }
      const double turns = net / (2.0 * std::numbers::pi);
      if (std::abs(turns - std::round(turns)) * 2.0 * std::numbers::pi > 1e-9) {
        std::ostringstream msg;
        msg << "term " << describe(t.factors) << " changes crystal momentum by " << net;
        throw MomentumError(msg.str());
      }
    }
  }
  // Hermiticity is checked on the qubit image, which is faithful and makes
  // reordered but equal products (n_a n_b vs n_b n_a) compare equal.
  const std::size_t n = mode_count(terms);
  if (n == 0) return;
  const PauliSum q = jordan_wigner(terms, n);
  const PauliSum anti = q - q.adjoint();
  for (const auto& [s, c] : anti.terms()) {
    if (std::abs(c) > 1e-9) {
      throw HermiticityError("operator is not hermitian: Pauli term " + s.str() + " has anti-hermitian part " +
                             std::to_string(std::abs(c) / 2.0));
    }
  }
}

std::size_t mode_count(const std::vector<FermionTerm>& terms) {
  std::size_t n = 0;
  for (const auto& t : terms) {
    for (const auto& f : t.factors) n = std::max(n, f.mode);
  }
  return n;
}

namespace {

// (X -+ iY)/2 on `qubit` after Z on qubits [z_from, qubit).
PauliSum ladder(std::size_t n, std::size_t z_from, std::size_t qubit, bool dagger) {
  PauliString x(n);
  PauliString y(n);
  for (std::size_t q = z_from; q < qubit; ++q) {
    x.set(q, 'Z');
    y.set(q, 'Z');
  }
  x.set(qubit, 'X');
  y.set(qubit, 'Y');
  PauliSum out(n);
  out.add(x, 0.5);
  out.add(y, dagger ? cplx(0, 0.5) : cplx(0, -0.5));
  return out;
}

std::string op_label(std::size_t mode, bool dagger) {
  return "c" + std::to_string(mode) + (dagger ? "^" : "");
}

}  // namespace

PauliSum ladder_op(std::size_t mode, std::size_t n_modes, bool dagger) {
  if (mode < 1 || mode > n_modes) {
    throw DimensionError("mode " + std::to_string(mode) + " outside 1.." + std::to_string(n_modes));
  }
  return ladder(n_modes, 0, mode - 1, dagger);
}

PauliSum jordan_wigner(const FermionTerm& t, std::size_t n_modes) {
  PauliSum out = PauliSum::identity(n_modes, t.coefficient);
  for (const auto& f : t.factors) out = out * ladder_op(f.mode, n_modes, f.dagger);
  return out;
}

PauliSum jordan_wigner(const std::vector<FermionTerm>& terms, std::size_t n_modes) {
  PauliSum out(n_modes);
  for (const auto& t : terms) out += jordan_wigner(t, n_modes);
  return out;
}

PauliSum truncated_ladder_op(std::size_t mode, const Partition& p, std::size_t subsystem,
                             bool dagger) {
  if (subsystem >= p.count()) throw PartitionError("subsystem index out of range");
  if (mode < 1 || mode - 1 < p.offset(subsystem) || mode - 1 >= p.offset(subsystem) + p.size(subsystem)) {
    throw SupportError("mode " + std::to_string(mode) + " is not in subsystem " +
                       std::to_string(subsystem + 1));
  }
  return ladder(p.size(subsystem), 0, mode - 1 - p.offset(subsystem), dagger);
}

FermionSet parse_fermion_set(const std::string& s) {
  if (s == "Ws") return FermionSet::Ws;
  if (s == "Wd") return FermionSet::Wd;
  throw PreconditionError("unknown fermionic excitation set '" + s + "'");
}

std::string to_string(FermionSet k) { return k == FermionSet::Ws ? "Ws" : "Wd"; }

ExcitationSet fermion_excitation_set(FermionSet kind, const Partition& p, std::size_t subsystem,
                                     bool complete_second_order) {
  if (subsystem >= p.count()) throw PartitionError("subsystem index out of range");
  const std::size_t n = p.size(subsystem);
  const std::size_t first = p.offset(subsystem) + 1;
  std::vector<PauliSum> c;
  std::vector<PauliSum> cd;
  for (std::size_t m = first; m < first + n; ++m) {
    c.push_back(truncated_ladder_op(m, p, subsystem, false));
    cd.push_back(truncated_ladder_op(m, p, subsystem, true));
  }
  ExcitationSet set;
  set.subsystem = subsystem;
  set.n_qubits = n;
  set.kind = to_string(kind);
  if (kind == FermionSet::Wd && complete_second_order) set.kind += "+";
  set.operators.push_back(PauliSum::identity(n));
  set.labels.emplace_back("I");
  for (std::size_t a = 0; a < n; ++a) {
    set.operators.push_back(c[a]);
    set.labels.push_back(op_label(first + a, false));
    set.operators.push_back(cd[a]);
    set.labels.push_back(op_label(first + a, true));
  }
  if (kind == FermionSet::Wd) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        set.operators.push_back(cd[a] * c[b]);
        set.labels.push_back(op_label(first + a, true) + " " + op_label(first + b, false));
      }
    }
    if (complete_second_order) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
          set.operators.push_back(c[a] * c[b]);
          set.labels.push_back(op_label(first + a, false) + " " + op_label(first + b, false));
          set.operators.push_back(cd[a] * cd[b]);
          set.labels.push_back(op_label(first + a, true) + " " + op_label(first + b, true));
        }
      }
    }
  }
  return set;
}

Partition momentum_partition(std::size_t n_k, std::size_t orbitals_per_k,
                             std::size_t n_qubit_per_subsystem) {
  const std::size_t total = n_k * orbitals_per_k;
  if (total == 0 || n_qubit_per_subsystem == 0) throw PartitionError("empty momentum partition");
  if (total % n_qubit_per_subsystem != 0) {
    throw PartitionError(std::to_string(total) + " spin orbitals cannot be split into blocks of " +
                         std::to_string(n_qubit_per_subsystem));
  }
  return Partition::uniform(total / n_qubit_per_subsystem, n_qubit_per_subsystem);
}

}  // namespace deepvqe
