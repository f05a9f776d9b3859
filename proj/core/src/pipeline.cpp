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

#include "deepvqe/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <thread>

#include "deepvqe/eigensolvers.hpp"
#include "deepvqe/errors.hpp"
#include "deepvqe/models.hpp"

namespace deepvqe {

std::string to_string(ModelKind k) { return k == ModelKind::Heisenberg ? "heisenberg" : "fermion"; }

std::string to_string(Backend b) { return b == Backend::Vqe ? "vqe" : "exact"; }

Backend parse_backend(const std::string& s) {
  if (s == "vqe") return Backend::Vqe;
  if (s == "exact") return Backend::Exact;
  throw PreconditionError("unknown backend '" + s + "' (expected vqe or exact)");
}

RunConfig::RunConfig() {
  step1.optimizer.restarts = 5;
  step3.optimizer.restarts = 10;
}

std::size_t RunConfig::n_total() const {
  return model == ModelKind::Heisenberg ? n_sub * n_qubit : n_k * orbitals;
}

Partition RunConfig::partition() const {
  if (model == ModelKind::Heisenberg) return Partition::uniform(n_sub, n_qubit);
  return momentum_partition(n_k, orbitals, n_qubit);
}

std::string RunConfig::model_name() const {
  if (model == ModelKind::Heisenberg) return "heisenberg";
  return "fermion:" + fermion_file.filename().string();
}

void RunConfig::validate() const {
  if (n_qubit == 0) throw PreconditionError("n_qubit must be positive");
  if (model == ModelKind::Heisenberg) {
    if (n_sub == 0 || n_total() < 2) throw PreconditionError("a Heisenberg run needs at least two sites");
    (void)parse_spin_set(basis);
  } else {
    if (fermion_file.empty()) throw PreconditionError("a fermion run needs a term file");
    if (n_k == 0 || orbitals == 0) throw PreconditionError("n_k and orbitals must be positive");
    (void)parse_fermion_set(basis);
  }
  if (n_total() > 30) throw PreconditionError("more than 30 qubits cannot be simulated");
  if (levels == 0) throw PreconditionError("levels must be at least 1");
  if (!(rank_tolerance > 0.0 && rank_tolerance < 1.0)) throw PreconditionError("rank_tolerance must lie in (0, 1)");
  if (gap_estimate && !(*gap_estimate >= 0.0)) throw PreconditionError("gap_estimate must be nonnegative");
  if (zero_penalty && !verify_penalty) {
    throw PreconditionError("a zero penalty is only accepted together with verify_penalty");
  }
  if (!ssvqe_weights.empty() && ssvqe_weights.size() != levels) {
    throw PreconditionError("ssvqe_weights needs one weight per level");
  }
  step1.optimizer.validate();
  step3.optimizer.validate();
  if (format != "json" && format != "csv") throw PreconditionError("format must be json or csv");
}

std::size_t default_step1_depth(std::size_t n_qubits) {
  return std::max<std::size_t>(1, (5 * n_qubits + 1) / 2);
}

std::size_t default_step3_depth(std::size_t n_qubits) { return (5 * n_qubits + 1) / 2 + 5; }

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <class F>
auto staged(const char* stage, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(stage, e.what());
  }
}

std::size_t step1_depth(const RunConfig& cfg, std::size_t n) {
  if (cfg.step1.depth > 0) return cfg.step1.depth;
  return cfg.model == ModelKind::Fermion ? 20 : default_step1_depth(n);
}

std::size_t step3_depth(const RunConfig& cfg, std::size_t n) {
  if (cfg.step3.depth > 0) return cfg.step3.depth;
  return cfg.model == ModelKind::Fermion ? 80 : default_step3_depth(n);
}

ExcitationSet excitation_set(const RunConfig& cfg, const Partition& p, std::size_t i) {
  if (cfg.model == ModelKind::Heisenberg) return spin_excitation_set(parse_spin_set(cfg.basis), p, i);
  return fermion_excitation_set(parse_fermion_set(cfg.basis), p, i, cfg.complete_second_order);
}

StateVector subsystem_reference(const RunConfig& cfg, const PauliSum& h, std::size_t n, std::size_t i) {
  if (cfg.step1.backend == Backend::Exact) {
    ExactOptions opt;
    opt.want_vectors = true;
    const SpectrumResult r = exact_spectrum(h, 1, opt);
    return StateVector(n, r.eigenvectors.front());
  }
  OptimizerConfig oc = cfg.step1.optimizer;
  oc.seed = mix_seed(cfg.seed, 1 + i);
  return vqe_ground(h, AnsatzSpec{n, step1_depth(cfg, n)}, oc).state;
}

std::string reference_bits(std::size_t m, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t q = 0; q < n && m > 0; ++q, m >>= 1) s[n - 1 - q] = (m & 1) ? '1' : '0';
  return s;
}

std::vector<double> lowest(const Matrix& m, std::size_t k) {
  const RealVector ev = hermitian_eigen(m, false).values;
  const auto count = std::min<Eigen::Index>(static_cast<Eigen::Index>(k), ev.size());
  return {ev.data(), ev.data() + count};
}

}  // namespace

PauliSum build_hamiltonian(const RunConfig& cfg) {
  if (cfg.model == ModelKind::Heisenberg) return heisenberg_hamiltonian(cfg.n_total());
  const auto terms = load_fermion_terms(cfg.fermion_file);
  if (mode_count(terms) > cfg.n_total()) {
    throw PreconditionError("term file uses mode " + std::to_string(mode_count(terms)) + " but the run has " +
                            std::to_string(cfg.n_total()) + " spin orbitals");
  }
  return jordan_wigner(terms, cfg.n_total());
}

namespace {

std::vector<StateVector> step1_references(const RunConfig& cfg, EffectiveStage& st) {
  st.partition = cfg.partition();
  const Partition& p = st.partition;
  st.hamiltonian = cfg.model == ModelKind::Heisenberg ? heisenberg_chain(cfg.n_total(), p)
                                                       : split_hamiltonian(build_hamiltonian(cfg), p, true);
  std::vector<StateVector> refs;
  for (std::size_t i = 0; i < p.count(); ++i) {
    const std::size_t n = p.size(i);
    if (st.hamiltonian.intra[i].n_qubits() == 0) st.hamiltonian.intra[i] = PauliSum(n);
    refs.push_back(subsystem_reference(cfg, st.hamiltonian.intra[i], n, i));
    st.local_energies.push_back(expectation(refs.back(), st.hamiltonian.intra[i]).real());
  }
  return refs;
}

void step2_coarse_grain(const RunConfig& cfg, EffectiveStage& st, const std::vector<StateVector>& refs) {
  const Partition& p = st.partition;
  for (std::size_t i = 0; i < p.count(); ++i) {
    st.bases.push_back(build_local_basis(refs[i], excitation_set(cfg, p, i), cfg.rank_tolerance));
  }
  st.eff = assemble_effective(p, st.bases, st.hamiltonian);

  double e = st.hamiltonian.constant.real();
  for (double v : st.local_energies) e += v;
  for (const auto& t : st.hamiltonian.inter) {
    e += (t.nu * expectation(refs[t.i], t.V) * expectation(refs[t.j], t.W)).real();
  }
  st.e0_local = e;
}

}  // namespace

EffectiveStage build_effective(const RunConfig& cfg) {
  cfg.validate();
  EffectiveStage st;
  const auto refs = step1_references(cfg, st);
  step2_coarse_grain(cfg, st, refs);
  return st;
}

std::vector<double> ed_baseline(const RunConfig& cfg) {
  const PauliSum h = build_hamiltonian(cfg);
  ExactOptions opt;
  opt.dense_limit = cfg.ed_dense_limit;
  const std::size_t k = std::min<std::size_t>(cfg.levels, std::size_t{1} << h.n_qubits());
  return exact_spectrum(h, k, opt).eigenvalues;
}

PenaltyCheck verify_penalty(const EffectiveHamiltonian& eff, const PenaltyVector& pen, std::size_t levels) {
  PenaltyCheck c;
  c.penalties = pen;
  c.effective = lowest(eff.dense(), levels);
  const auto all = block_spectrum_decomposition(eff, pen);
  c.embedded.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(std::min(levels, all.size())));
  c.passed = c.embedded.size() == c.effective.size();
  for (std::size_t m = 0; m < std::min(c.effective.size(), c.embedded.size()); ++m) {
    c.max_deviation = std::max(c.max_deviation, std::abs(c.effective[m] - c.embedded[m]));
  }
  c.passed = c.passed && c.max_deviation <= 1e-9;
  return c;
}

RunReport run_pipeline(const RunConfig& cfg) {
  staged("config", [&] { cfg.validate(); });
  RunReport r;
  r.model = cfg.model_name();
  r.split = staged("config", [&] { return cfg.partition().label(); });
  r.basis = cfg.basis;
  if (cfg.model == ModelKind::Fermion && cfg.complete_second_order && r.basis == "Wd") r.basis = "Wd+";
  r.step1 = to_string(cfg.step1.backend);
  r.step3 = to_string(cfg.step3.backend);
  r.seed = cfg.seed;

  auto t0 = Clock::now();
  EffectiveStage st;
  const auto refs = staged("step1", [&] { return step1_references(cfg, st); });
  r.timing.step1 = seconds_since(t0);
  t0 = Clock::now();
  staged("step2", [&] { step2_coarse_grain(cfg, st, refs); });
  r.timing.step2 = seconds_since(t0);
  r.e0_local = st.e0_local;
  r.K = st.eff.dims();
  const ResourceMetrics rm = resource_metrics(st.eff, st.partition.sizes());
  r.truncation_rate = rm.truncation_rate;
  r.n_required = rm.n_required;
  r.step3_qubits = rm.step3_qubits;

  t0 = Clock::now();
  staged("step3", [&] {
    const std::size_t L = cfg.levels;
    PenaltyVector pen;
    if (cfg.zero_penalty) {
      pen = zero_penalties(st.eff);
      r.penalty_mode = "zero";
    } else {
      const double gap = cfg.gap_estimate ? *cfg.gap_estimate : first_order_gap(st.eff, L - 1);
      pen = penalty_bounds(st.eff, L - 1, gap, cfg.penalty_mode);
      r.penalty_mode = to_string(cfg.penalty_mode);
      r.gap_estimate = gap;
    }
    r.lambda = pen.lambda;
    if (cfg.verify_penalty) {
      const PenaltyCheck check = verify_penalty(st.eff, pen, L);
      r.penalty_verified = check.passed;
      if (cfg.zero_penalty && !check.passed) {
        throw PreconditionError("zero penalty changes the low spectrum (deviation " +
                                std::to_string(check.max_deviation) + ")");
      }
    }
    if (cfg.step3.backend == Backend::Exact) {
      r.energies = lowest(st.eff.dense(), L);
      return;
    }
    std::size_t n = 0;
    for (const std::size_t k : st.eff.dims()) n += effective_qubits(k);
    if (n == 0) throw PreconditionError("the effective model has no qubits to optimize");
    if ((std::size_t{1} << n) < L) throw PreconditionError("more levels requested than the register holds");
    SsvqeConfig s;
    for (std::size_t m = 0; m < L; ++m) s.references.push_back(reference_bits(m, n));
    s.weights = cfg.ssvqe_weights;
    if (s.weights.empty()) {
      if (L == 2) {
        s.weights = cfg.model == ModelKind::Heisenberg ? std::vector<double>{2, 1} : std::vector<double>{7, 2};
      } else {
        for (std::size_t m = 0; m < L; ++m) s.weights.push_back(static_cast<double>(L - m));
      }
    }
    OptimizerConfig oc = cfg.step3.optimizer;
    oc.seed = mix_seed(cfg.seed, 0x5733);
    // The optimizer applies embed_to_qubits(eff, pen) through its Kronecker
    // factors rather than its Pauli expansion; the operator is the same.
    const SsvqeResult res = ssvqe(embedded_operator(st.eff, pen), AnsatzSpec{n, step3_depth(cfg, n)}, oc, s);
    for (const auto& level : res.levels) r.energies.push_back(level.energy);
  });
  r.timing.step3 = seconds_since(t0);

  if (cfg.run_ed) {
    t0 = Clock::now();
    r.ed_energies = staged("ed", [&] { return ed_baseline(cfg); });
    r.timing.ed = seconds_since(t0);
    for (std::size_t m = 0; m < std::min(r.energies.size(), r.ed_energies.size()); ++m) {
      r.relative_errors.push_back(std::abs(r.energies[m] - r.ed_energies[m]) / std::abs(r.ed_energies[m]));
    }
  }
  return r;
}

std::vector<RunConfig> table1_grid() {
  std::vector<RunConfig> out;
  const std::pair<std::size_t, std::size_t> splits[] = {{2, 4}, {3, 4}, {2, 6}, {2, 8}};
  for (const auto& [n_sub, n_qubit] : splits) {
    for (const char* basis : {"W1", "W2"}) {
      RunConfig c;
      c.n_sub = n_sub;
      c.n_qubit = n_qubit;
      c.basis = basis;
      out.push_back(c);
    }
  }
  return out;
}

std::vector<RunReport> run_grid(const std::vector<RunConfig>& configs, std::size_t jobs) {
  std::vector<RunReport> out(configs.size());
  std::vector<std::exception_ptr> errors(configs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < configs.size();) {
      try {
        out[k] = run_pipeline(configs[k]);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const std::size_t n = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(1, configs.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace deepvqe
