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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "deepvqe/coarse_grain.hpp"
#include "deepvqe/effective_model.hpp"
#include "deepvqe/optimizer.hpp"
#include "deepvqe/partition.hpp"

namespace deepvqe {

enum class ModelKind { Heisenberg, Fermion };
enum class Backend { Vqe, Exact };

std::string to_string(ModelKind k);
std::string to_string(Backend b);
Backend parse_backend(const std::string& s);

struct StepConfig {
  Backend backend = Backend::Exact;
  std::size_t depth = 0;  // 0 picks the default for the register size
  OptimizerConfig optimizer;
};

/// One Deep VQE run. (exact, exact) diagonalizes both the subsystems and the
/// coarse-grained model; (vqe, exact) keeps VQE references; (vqe, vqe) is the
/// full variational protocol.
struct RunConfig {
  ModelKind model = ModelKind::Heisenberg;
  std::size_t n_sub = 2;
  std::size_t n_qubit = 4;                // per subsystem
  std::filesystem::path fermion_file;     // JSON-lines term file
  std::size_t n_k = 0;
  std::size_t orbitals = 0;               // spin orbitals per k point

  std::string basis = "W2";               // W, W1, W2 | Ws, Wd
  bool complete_second_order = false;

  StepConfig step1;
  StepConfig step3;
  std::vector<double> ssvqe_weights;      // empty: (2, 1) spin, (7, 2) fermion
  std::size_t levels = 2;

  PenaltyMode penalty_mode = PenaltyMode::Excited;
  std::optional<double> gap_estimate;     // unset: built-in estimate
  bool zero_penalty = false;              // lambda = 0, requires verify_penalty
  bool verify_penalty = false;

  double rank_tolerance = 1e-8;
  bool run_ed = true;
  std::size_t ed_dense_limit = 10;        // qubits; Lanczos above
  std::uint64_t seed = 0;

  std::filesystem::path output;
  std::string format = "json";

  RunConfig();
  /// Throws PreconditionError on an invalid combination.
  void validate() const;
  std::size_t n_total() const;
  Partition partition() const;
  std::string model_name() const;
};

/// Ansatz depth defaults: ceil(2.5 n) layers for an n-qubit subsystem (10/15/20
/// for 4/6/8 qubits) and five more for an n-qubit effective model.
std::size_t default_step1_depth(std::size_t n_qubits);
std::size_t default_step3_depth(std::size_t n_qubits);

struct RunTiming {
  double step1 = 0.0;
  double step2 = 0.0;
  double step3 = 0.0;
  double ed = 0.0;
};

struct RunReport {
  std::string model;
  std::string split;
  std::string basis;
  std::string step1;
  std::string step3;
  std::vector<double> energies;
  std::vector<double> ed_energies;        // empty when ED was skipped
  std::vector<double> relative_errors;    // present iff ed_energies is
  std::optional<double> e0_local;
  double truncation_rate = 0.0;
  std::size_t n_required = 0;
  std::size_t step3_qubits = 0;
  std::vector<std::size_t> K;
  std::vector<double> lambda;
  std::string penalty_mode;
  double gap_estimate = 0.0;
  std::optional<bool> penalty_verified;
  std::uint64_t seed = 0;
  RunTiming timing;  // not part of equality

  friend bool operator==(const RunReport& a, const RunReport& b);
};

/// Steps 1 and 2 of a run, exposed for tests and the verify-penalty command.
struct EffectiveStage {
  Partition partition;
  SplitHamiltonian hamiltonian;
  std::vector<LocalBasis> bases;
  std::vector<double> local_energies;     // <psi_i|H_i|psi_i>
  EffectiveHamiltonian eff;
  double e0_local = 0.0;
};

PauliSum build_hamiltonian(const RunConfig& cfg);
EffectiveStage build_effective(const RunConfig& cfg);

/// Lowest cfg.levels eigenvalues of the full Hamiltonian.
std::vector<double> ed_baseline(const RunConfig& cfg);

struct PenaltyCheck {
  PenaltyVector penalties;
  std::vector<double> effective;     // lowest levels of H~
  std::vector<double> embedded;      // lowest levels of the block decomposition
  double max_deviation = 0.0;
  bool passed = false;
};

/// Compares the low spectrum of the padded model against H~ via the block
/// decomposition, at tolerance 1e-9.
PenaltyCheck verify_penalty(const EffectiveHamiltonian& eff, const PenaltyVector& pen, std::size_t levels);

/// Runs Steps 1-3 and the baselines. Errors are rethrown as StageError
/// tagged with "config", "step1", "step2", "step3" or "ed".
RunReport run_pipeline(const RunConfig& cfg);

/// The eight exact-backend Heisenberg cells {2x4, 3x4, 2x6, 2x8} x {W1, W2}.
std::vector<RunConfig> table1_grid();

/// Runs independent configurations on up to `jobs` threads, keeping order.
std::vector<RunReport> run_grid(const std::vector<RunConfig>& configs, std::size_t jobs);

enum class ReportFormat { Json, Csv };
ReportFormat parse_report_format(const std::string& s);

inline constexpr const char* kCsvHeader = "model,split,basis,E0,E0_err,E1,E1_err,TR,N_req,seed";

void write_reports(std::ostream& out, const std::vector<RunReport>& reports, ReportFormat format);
/// Writes to `path`; throws Error on I/O failure.
void emit_report(const RunReport& r, ReportFormat format, const std::filesystem::path& path);
void emit_reports(const std::vector<RunReport>& r, ReportFormat format, const std::filesystem::path& path);
RunReport load_report(const std::filesystem::path& path);

void to_json(nlohmann::json& j, const RunConfig& c);
void from_json(const nlohmann::json& j, RunConfig& c);
void to_json(nlohmann::json& j, const RunReport& r);
void from_json(const nlohmann::json& j, RunReport& r);

}  // namespace deepvqe
