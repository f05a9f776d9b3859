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

#include "deepvqe/eigensolvers.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include <nlohmann/json.hpp>

#include "deepvqe/coarse_grain.hpp"
#include "deepvqe/errors.hpp"

namespace deepvqe {

std::string to_string(SpectrumMethod m) {
  switch (m) {
    case SpectrumMethod::Dense: return "dense";
    case SpectrumMethod::Lanczos: return "lanczos";
    case SpectrumMethod::Variational: return "variational";
    case SpectrumMethod::Projected: return "projected";
  }
  return "dense";
}

SsvqeConfig SsvqeConfig::two_state(std::size_t n_qubits, double w0, double w1) {
  SsvqeConfig c;
  c.weights = {w0, w1};
  std::string r0(n_qubits, '0');
  std::string r1 = r0;
  if (n_qubits > 0) r1.back() = '1';
  c.references = {r0, r1};
  return c;
}

void SsvqeConfig::validate(std::size_t n_qubits) const {
  if (weights.empty()) throw PreconditionError("SSVQE needs at least one weight");
  if (weights.size() != references.size()) {
    throw ShapeError("SSVQE needs one weight per reference");
  }
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!(weights[i] > 0.0)) throw PreconditionError("SSVQE weights must be positive");
    if (i > 0 && !(weights[i] < weights[i - 1])) {
      throw PreconditionError("SSVQE weights must be strictly decreasing");
    }
  }
  std::set<std::string> seen;
  for (const auto& r : references) {
    if (r.size() != n_qubits) throw ShapeError("SSVQE reference length differs from the qubit count");
    if (r.find_first_not_of("01") != std::string::npos) {
      throw ShapeError("SSVQE reference must contain only 0 and 1");
    }
    if (!seen.insert(r).second) throw PreconditionError("SSVQE references must be distinct");
  }
}

namespace {

std::vector<double> random_angles(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(mix_seed(seed, 0));
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<double> out(count);
  for (auto& a : out) a = angle(rng);
  return out;
}

void require_hermitian(const PauliSum& h, const char* where) {
  if (!h.is_hermitian(1e-10)) throw PreconditionError(std::string(where) + ": Hamiltonian is not hermitian");
}

}  // namespace

VqeResult vqe_ground(const PauliSum& h, const AnsatzSpec& spec, const OptimizerConfig& cfg) {
  require_hermitian(h, "vqe_ground");
  const AnsatzObjective obj(spec, h, {std::string(spec.n_qubits, '0')}, {1.0});
  const Objective f = [&](const std::vector<double>& x, std::vector<double>* g) {
    return obj.evaluate(x, g, cfg.gradient, cfg.fd_step);
  };
  VqeResult out;
  out.optimizer = minimize(f, random_angles(spec.parameter_count(), cfg.seed), cfg);
  out.params = out.optimizer.params;
  out.state = run_ansatz(spec, out.params);
  out.energy = expectation(out.state, h).real();
  return out;
}

namespace {

SsvqeResult run_ssvqe(const AnsatzObjective& obj, const OptimizerConfig& cfg, const SsvqeConfig& s) {
  const Objective f = [&](const std::vector<double>& x, std::vector<double>* g) {
    return obj.evaluate(x, g, cfg.gradient, cfg.fd_step);
  };
  const AnsatzSpec& spec = obj.spec();
  SsvqeResult out;
  out.optimizer = minimize(f, random_angles(spec.parameter_count(), cfg.seed), cfg);
  out.params = out.optimizer.params;
  const std::vector<double> energies = obj.energies(out.params);
  for (std::size_t r = 0; r < s.references.size(); ++r) {
    SsvqeLevel level;
    level.reference = s.references[r];
    level.state = run_ansatz(spec, out.params, level.reference);
    level.energy = energies[r];
    out.levels.push_back(std::move(level));
  }
  return out;
}

}  // namespace

SsvqeResult ssvqe(const PauliSum& h, const AnsatzSpec& spec, const OptimizerConfig& cfg,
                  const SsvqeConfig& s) {
  require_hermitian(h, "ssvqe");
  s.validate(spec.n_qubits);
  return run_ssvqe(AnsatzObjective(spec, h, s.references, s.weights), cfg, s);
}

SsvqeResult ssvqe(const MatVec& h, const AnsatzSpec& spec, const OptimizerConfig& cfg, const SsvqeConfig& s) {
  s.validate(spec.n_qubits);
  return run_ssvqe(AnsatzObjective(spec, h, s.references, s.weights), cfg, s);
}

SpectrumResult exact_spectrum(const PauliSum& h, std::size_t k, const ExactOptions& opt) {
  require_hermitian(h, "exact_spectrum");
  if (k == 0) throw PreconditionError("exact_spectrum: k must be at least 1");
  const std::size_t dim = std::size_t{1} << h.n_qubits();
  if (k > dim) throw PreconditionError("exact_spectrum: k exceeds the Hilbert space dimension");
  if (h.n_qubits() <= opt.dense_limit) {
    SpectrumResult r = exact_spectrum(to_dense(h, opt.dense_limit), k, opt.want_vectors);
    return r;
  }
  const CompiledPauliSum op(h);
  const LanczosResult lz =
      lanczos_lowest([&op](const Vector& in, Vector& out) { op.apply(in, out); }, dim, k, opt.lanczos);
  SpectrumResult r;
  r.method = SpectrumMethod::Lanczos;
  r.eigenvalues = lz.values;
  if (opt.want_vectors) r.eigenvectors = lz.vectors;
  return r;
}

SpectrumResult exact_spectrum(const Matrix& h, std::size_t k, bool want_vectors) {
  if (k == 0) throw PreconditionError("exact_spectrum: k must be at least 1");
  if (k > static_cast<std::size_t>(h.rows())) {
    throw PreconditionError("exact_spectrum: k exceeds the matrix dimension");
  }
  const HermitianEigen eig = hermitian_eigen(h, want_vectors);
  SpectrumResult r;
  r.method = SpectrumMethod::Dense;
  for (std::size_t i = 0; i < k; ++i) {
    r.eigenvalues.push_back(eig.values(static_cast<Eigen::Index>(i)));
    if (want_vectors) r.eigenvectors.emplace_back(eig.vectors.col(static_cast<Eigen::Index>(i)));
  }
  return r;
}

SpectrumResult qse_spectrum(const PauliSum& h_sub, const std::vector<PauliSum>& ops,
                            const StateVector& ref, std::size_t k, double rank_tolerance) {
  if (std::abs(ref.norm() - 1.0) > 1e-8) throw PreconditionError("qse_spectrum: reference is not normalized");
  if (ops.empty()) throw DegenerateBasisError("qse_spectrum: no excitation operators");
  if (h_sub.n_qubits() != ref.n_qubits()) throw DimensionError("qse_spectrum: qubit counts differ");
  const auto dim = static_cast<Eigen::Index>(ref.dimension());
  Matrix phi(dim, static_cast<Eigen::Index>(ops.size()));
  Vector tmp;
  for (std::size_t a = 0; a < ops.size(); ++a) {
    if (ops[a].n_qubits() != ref.n_qubits()) throw DimensionError("qse_spectrum: operator size mismatch");
    apply(ops[a], ref.amplitudes(), tmp);
    phi.col(static_cast<Eigen::Index>(a)) = tmp;
  }
  Matrix g = phi.adjoint() * phi;
  g = 0.5 * (g + g.adjoint());
  const Orthonormalization o = orthonormalize(g, rank_tolerance);
  const Matrix basis = phi * o.S;
  const CompiledPauliSum h(h_sub);
  Matrix hb(dim, basis.cols());
  for (Eigen::Index c = 0; c < basis.cols(); ++c) {
    h.apply(basis.col(c), tmp);
    hb.col(c) = tmp;
  }
  Matrix proj = basis.adjoint() * hb;
  proj = 0.5 * (proj + proj.adjoint());
  const std::size_t count = k == 0 ? o.K : std::min(k, o.K);
  SpectrumResult r = exact_spectrum(proj, count, false);
  r.method = SpectrumMethod::Projected;
  return r;
}

void to_json(nlohmann::json& j, const SsvqeConfig& c) {
  j = {{"weights", c.weights}, {"references", c.references}};
}

void from_json(const nlohmann::json& j, SsvqeConfig& c) {
  c.weights = j.at("weights").get<std::vector<double>>();
  c.references = j.value("references", std::vector<std::string>{});
}

}  // namespace deepvqe
