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
#include "deepvqe/optimizer.hpp"
#include "deepvqe/pauli.hpp"
#include "deepvqe/statevector.hpp"

namespace deepvqe {

enum class SpectrumMethod { Dense, Lanczos, Variational, Projected };

std::string to_string(SpectrumMethod m);

struct SpectrumResult {
  std::vector<double> eigenvalues;  // ascending
  std::vector<Vector> eigenvectors; // empty unless requested
  SpectrumMethod method = SpectrumMethod::Dense;
};

/// Weighted multi-reference cost. Weights strictly decreasing and positive,
/// references pairwise distinct computational basis states.
struct SsvqeConfig {
  std::vector<double> weights;
  std::vector<std::string> references;

  /// The two-state setup |0...00>, |0...01> with weights (w0, w1).
  static SsvqeConfig two_state(std::size_t n_qubits, double w0, double w1);
  void validate(std::size_t n_qubits) const;
};

struct VqeResult {
  double energy = 0.0;
  std::vector<double> params;
  StateVector state{1};
  MinimizeResult optimizer;
};

/// Ground-state VQE from |0...0>. Initial parameters for every restart are
/// uniform on [0, 2 pi), drawn from cfg.seed.
VqeResult vqe_ground(const PauliSum& h, const AnsatzSpec& spec, const OptimizerConfig& cfg);

struct SsvqeLevel {
  double energy = 0.0;
  std::string reference;
  StateVector state{1};
};

struct SsvqeResult {
  std::vector<SsvqeLevel> levels;  // in reference (descending weight) order
  std::vector<double> params;      // shared by every level
  MinimizeResult optimizer;
};

SsvqeResult ssvqe(const PauliSum& h, const AnsatzSpec& spec, const OptimizerConfig& cfg,
                  const SsvqeConfig& s);
/// Same, with a hermitian H applied matrix-free on spec.n_qubits qubits.
SsvqeResult ssvqe(const MatVec& h, const AnsatzSpec& spec, const OptimizerConfig& cfg, const SsvqeConfig& s);

struct ExactOptions {
  std::size_t dense_limit = kDenseLimit;  // qubits
  bool want_vectors = false;
  LanczosOptions lanczos{};
};

/// Lowest `k` eigenvalues of a hermitian PauliSum. Dense eigendecomposition up
/// to `dense_limit` qubits, matrix-free Lanczos above.
SpectrumResult exact_spectrum(const PauliSum& h, std::size_t k, const ExactOptions& opt = {});

/// Lowest `k` eigenvalues of a dense hermitian matrix.
SpectrumResult exact_spectrum(const Matrix& h, std::size_t k, bool want_vectors = false);

/// Eigenvalues of `h_sub` projected onto the orthonormalized span of
/// {P |ref> : P in ops}; `k` = 0 returns all of them.
/// Throws DegenerateBasisError when the span is numerically empty.
SpectrumResult qse_spectrum(const PauliSum& h_sub, const std::vector<PauliSum>& ops,
                            const StateVector& ref, std::size_t k, double rank_tolerance = 1e-8);

void to_json(nlohmann::json& j, const SsvqeConfig& c);
void from_json(const nlohmann::json& j, SsvqeConfig& c);

}  // namespace deepvqe
