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
#include <string_view>
#include <vector>

#include "deepvqe/linalg.hpp"
#include "deepvqe/pauli.hpp"

namespace deepvqe {

/// Amplitudes of an n-qubit pure state. Qubit 0 is the most significant index
/// bit. Gate methods mutate in place and are not thread safe; every const
/// method (overlap, expectation) only reads, so a state that is no longer
/// being mutated may be shared by any number of readers.
class StateVector {
 public:
  /// |0...0>.
  explicit StateVector(std::size_t n_qubits);
  /// Takes ownership of `amplitudes`; the length must be 2^n_qubits.
  StateVector(std::size_t n_qubits, Vector amplitudes);
  /// Computational basis state from a string of '0'/'1', qubit 0 first.
  static StateVector from_bitstring(std::string_view bits);

  std::size_t n_qubits() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return static_cast<std::size_t>(amps_.size()); }
  const Vector& amplitudes() const noexcept { return amps_; }
  Vector& amplitudes() noexcept { return amps_; }
  double norm() const { return amps_.norm(); }

  /// exp(-i theta Y / 2) on `qubit`.
  void ry(std::size_t qubit, double theta);
  /// exp(-i theta Z / 2) on `qubit`.
  void rz(std::size_t qubit, double theta);
  void cz(std::size_t a, std::size_t b);
  /// CZ on every neighbouring pair (q, q+1).
  void cz_ladder();
  /// Applies a Pauli string (including its phase) in place.
  void apply_pauli(const PauliString& p);

 private:
  std::size_t n_;
  Vector amps_;
};

/// <a|b>.
cplx overlap(const StateVector& a, const StateVector& b);

/// <state| observable |state>, summed term by term. The imaginary part is
/// nonzero only for non-hermitian observables.
cplx expectation(const StateVector& state, const PauliSum& observable);

/// Alternating RY/RZ rotation layers separated by CZ ladders:
/// U = L_{D} * prod_{d<D} [CZ ladder * L_d], with L_d = prod_q RZ_q RY_q.
/// Parameter 2*n*d + q is RY on qubit q in layer d, 2*n*d + n + q is RZ.
struct AnsatzSpec {
  std::size_t n_qubits = 1;
  std::size_t depth = 0;

  std::size_t parameter_count() const noexcept { return 2 * n_qubits * (depth + 1); }
};

/// U(params)|reference>. `reference` is a '0'/'1' string of length n_qubits;
/// empty means |0...0>.
StateVector run_ansatz(const AnsatzSpec& spec, const std::vector<double>& params,
                       std::string_view reference = {});

enum class GradientMode { ParameterShift, FiniteDifference, Adjoint };

/// Weighted sum of ansatz energies over several references with shared
/// parameters: sum_r w_r <ref_r| U^dagger H U |ref_r>. The single-reference
/// VQE cost is the case of one reference with weight 1.
class AnsatzObjective {
 public:
  AnsatzObjective(AnsatzSpec spec, const PauliSum& h, std::vector<std::string> references,
                  std::vector<double> weights);
  /// H given matrix-free on the 2^n_qubits register; it must be hermitian.
  AnsatzObjective(AnsatzSpec spec, MatVec h, std::vector<std::string> references, std::vector<double> weights);

  const AnsatzSpec& spec() const noexcept { return spec_; }
  const std::vector<std::string>& references() const noexcept { return refs_; }

  double value(const std::vector<double>& params) const;
  /// Cost, and its gradient into `grad` when non-null.
  double evaluate(const std::vector<double>& params, std::vector<double>* grad, GradientMode mode,
                  double fd_step = 1e-5) const;
  /// Energy of each reference separately.
  std::vector<double> energies(const std::vector<double>& params) const;
  std::vector<double> gradient(const std::vector<double>& params, GradientMode mode,
                               double fd_step = 1e-5) const;

 private:
  double adjoint(const std::vector<double>& params, std::vector<double>& grad) const;

  double energy(const Vector& psi) const;

  AnsatzSpec spec_;
  MatVec h_;
  std::vector<std::string> refs_;
  std::vector<double> weights_;
};

}  // namespace deepvqe
