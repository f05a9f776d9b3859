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

#include "deepvqe/effective_model.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <memory>
#include <utility>

#include <nlohmann/json.hpp>

#include "deepvqe/errors.hpp"

namespace deepvqe {

namespace {

std::vector<std::size_t> strides_of(const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> s(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) s[k - 1] = s[k] * dims[k];
  return s;
}

std::size_t product(const std::vector<std::size_t>& dims) {
  std::size_t p = 1;
  for (std::size_t d : dims) p *= d;
  return p;
}

// Offsets of every basis index with the listed subsystems fixed to zero.
std::vector<std::size_t> rest_offsets(const std::vector<std::size_t>& dims,
                                      const std::vector<std::size_t>& fixed) {
  const auto strides = strides_of(dims);
  std::vector<std::size_t> out{0};
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (std::find(fixed.begin(), fixed.end(), k) != fixed.end()) continue;
    std::vector<std::size_t> next;
    next.reserve(out.size() * dims[k]);
    for (std::size_t base : out) {
      for (std::size_t a = 0; a < dims[k]; ++a) next.push_back(base + a * strides[k]);
    }
    out = std::move(next);
  }
  return out;
}

void place_single(Matrix& out, const Matrix& op, std::size_t i, const std::vector<std::size_t>& dims) {
  const auto strides = strides_of(dims);
  const auto si = static_cast<Eigen::Index>(strides[i]);
  for (std::size_t base : rest_offsets(dims, {i})) {
    const auto b = static_cast<Eigen::Index>(base);
    for (Eigen::Index c = 0; c < op.cols(); ++c) {
      for (Eigen::Index r = 0; r < op.rows(); ++r) out(b + r * si, b + c * si) += op(r, c);
    }
  }
}

// `op` acts on subsystems i (more significant) and j of the product.
void place_pair(Matrix& out, const Matrix& op, std::size_t i, std::size_t j,
                const std::vector<std::size_t>& dims) {
  const auto strides = strides_of(dims);
  const auto si = static_cast<Eigen::Index>(strides[i]);
  const auto sj = static_cast<Eigen::Index>(strides[j]);
  const auto dj = static_cast<Eigen::Index>(dims[j]);
  std::vector<Eigen::Index> pos(static_cast<std::size_t>(op.rows()));
  for (Eigen::Index r = 0; r < op.rows(); ++r) pos[static_cast<std::size_t>(r)] = (r / dj) * si + (r % dj) * sj;
  for (std::size_t base : rest_offsets(dims, {i, j})) {
    const auto b = static_cast<Eigen::Index>(base);
    for (Eigen::Index c = 0; c < op.cols(); ++c) {
      const Eigen::Index col = b + pos[static_cast<std::size_t>(c)];
      for (Eigen::Index r = 0; r < op.rows(); ++r) {
        const cplx v = op(r, c);
        if (v != cplx{}) out(b + pos[static_cast<std::size_t>(r)], col) += v;
      }
    }
  }
}

Matrix pad(const Matrix& m, std::size_t dim, cplx fill) {
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  out.topLeftCorner(m.rows(), m.cols()) = m;
  for (auto k = m.rows(); k < static_cast<Eigen::Index>(dim); ++k) out(k, k) = fill;
  return out;
}

// Sum of nu V (x) W per subsystem pair.
std::map<std::pair<std::size_t, std::size_t>, Matrix> pair_operators(
    const std::vector<Coupling>& couplings, const std::vector<std::size_t>& dims) {
  std::map<std::pair<std::size_t, std::size_t>, Matrix> out;
  for (const auto& c : couplings) {
    const Matrix v = pad(c.V, dims[c.i], 0.0);
    const Matrix w = pad(c.W, dims[c.j], 0.0);
    const Matrix term = c.nu * kron(v, w);
    auto [it, fresh] = out.try_emplace({c.i, c.j}, term);
    if (!fresh) it->second += term;
  }
  return out;
}

// Dense model over `dims` (dims[i] >= K_i) with block i padded by shift[i].
Matrix assemble(const std::vector<Matrix>& blocks, const std::vector<Coupling>& couplings,
                cplx constant, const std::vector<std::size_t>& dims, const std::vector<double>& shift) {
  const auto total = static_cast<Eigen::Index>(product(dims));
  Matrix out = constant * Matrix::Identity(total, total);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    place_single(out, pad(blocks[i], dims[i], shift[i]), i, dims);
  }
  for (const auto& [ij, op] : pair_operators(couplings, dims)) place_pair(out, op, ij.first, ij.second, dims);
  return out;
}

// out += x * mt on every slice where the factor of stride `inner` varies;
// mt is the transposed local operator.
void apply_local(const Matrix& mt, const Vector& in, Vector& out, std::size_t inner) {
  const auto d = mt.rows();
  const auto ni = static_cast<Eigen::Index>(inner);
  const auto step = static_cast<Eigen::Index>(inner) * d;
  for (Eigen::Index base = 0; base < in.size(); base += step) {
    const Eigen::Map<const Matrix> x(in.data() + base, ni, d);
    Eigen::Map<Matrix> y(out.data() + base, ni, d);
    y.noalias() += x * mt;
  }
}

struct FactoredOperator {
  struct Pair {
    std::size_t i, j;
    Matrix vt, wt;  // nu folded into vt
  };
  cplx constant;
  std::vector<std::size_t> inner;
  std::vector<Matrix> blocks;
  std::vector<Pair> pairs;

  void operator()(const Vector& in, Vector& out) const {
    out = constant * in;
    for (std::size_t i = 0; i < blocks.size(); ++i) apply_local(blocks[i], in, out, inner[i]);
    Vector w(in.size());
    for (const auto& p : pairs) {
      w.setZero();
      apply_local(p.wt, in, w, inner[p.j]);
      apply_local(p.vt, w, out, inner[p.i]);
    }
  }
};

void check_penalties(const EffectiveHamiltonian& eff, const PenaltyVector& pen) {
  if (pen.lambda.size() != eff.subsystem_count()) {
    throw DimensionError("penalty vector has " + std::to_string(pen.lambda.size()) +
                         " entries for " + std::to_string(eff.subsystem_count()) + " subsystems");
  }
}

std::vector<std::size_t> resolve_padding(const EffectiveHamiltonian& eff, std::vector<std::size_t> padded) {
  if (padded.empty()) return qubit_padding(eff);
  const auto dims = eff.dims();
  if (padded.size() != dims.size()) throw DimensionError("one padded dimension per subsystem is required");
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (padded[i] < dims[i]) throw DimensionError("padded dimension below K for subsystem " + std::to_string(i + 1));
  }
  return padded;
}

double matrix_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  if (hermiticity_defect(m) <= 1e-12 * std::max(1.0, m.cwiseAbs().maxCoeff())) {
    const RealVector ev = hermitian_eigen(m, false).values;
    return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  }
  return spectral_norm(m);
}

}  // namespace

std::vector<std::size_t> EffectiveHamiltonian::dims() const {
  std::vector<std::size_t> d;
  d.reserve(blocks.size());
  for (const auto& b : blocks) d.push_back(static_cast<std::size_t>(b.rows()));
  return d;
}

std::size_t EffectiveHamiltonian::dimension() const { return product(dims()); }

Matrix EffectiveHamiltonian::dense() const {
  validate();
  return assemble(blocks, couplings, constant, dims(), std::vector<double>(blocks.size(), 0.0));
}

void EffectiveHamiltonian::validate() const {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Matrix& b = blocks[i];
    if (b.rows() != b.cols() || b.rows() == 0) {
      throw DimensionError("block " + std::to_string(i + 1) + " is not a nonempty square matrix");
    }
    if (hermiticity_defect(b) > 1e-10 * std::max(1.0, b.cwiseAbs().maxCoeff())) {
      throw HermiticityError("block " + std::to_string(i + 1) + " is not hermitian");
    }
  }
  for (const auto& c : couplings) {
    if (c.i >= c.j || c.j >= blocks.size()) throw DimensionError("coupling indices must satisfy i < j < count");
    if (c.V.rows() != blocks[c.i].rows() || c.V.cols() != blocks[c.i].cols() ||
        c.W.rows() != blocks[c.j].rows() || c.W.cols() != blocks[c.j].cols()) {
      throw DimensionError("coupling between " + std::to_string(c.i + 1) + " and " +
                           std::to_string(c.j + 1) + " does not match the block sizes");
    }
  }
}

EffectiveHamiltonian assemble_effective(const Partition& p, const std::vector<LocalBasis>& bases,
                                        const SplitHamiltonian& h, ElementMethod method) {
  if (bases.size() != p.count() || h.intra.size() != p.count()) {
    throw DimensionError("need one local basis and one intra term per subsystem");
  }
  for (std::size_t i = 0; i < p.count(); ++i) {
    if (bases[i].n_qubits() != p.size(i)) {
      throw DimensionError("local basis " + std::to_string(i + 1) + " lives on " +
                           std::to_string(bases[i].n_qubits()) + " qubits, subsystem has " +
                           std::to_string(p.size(i)));
    }
  }
  std::vector<Matrix> states;
  if (method == ElementMethod::StateProjection) {
    for (const auto& b : bases) states.push_back(basis_states(b));
  }
  auto element = [&](std::size_t i, const PauliSum& A) -> Matrix {
    if (method == ElementMethod::PauliExpansion) return matrix_elements(bases[i], A, method);
    if (A.n_qubits() != p.size(i)) throw SupportError("operator does not live on subsystem " + std::to_string(i + 1));
    const CompiledPauliSum a(A);
    const Matrix& phi = states[i];
    Matrix aphi(phi.rows(), phi.cols());
    Vector out;
    for (Eigen::Index c = 0; c < phi.cols(); ++c) {
      a.apply(phi.col(c), out);
      aphi.col(c) = out;
    }
    return phi.adjoint() * aphi;
  };

  EffectiveHamiltonian eff;
  eff.constant = h.constant;
  for (std::size_t i = 0; i < p.count(); ++i) {
    const PauliSum& hi = h.intra[i].n_qubits() == 0 ? PauliSum(p.size(i)) : h.intra[i];
    Matrix b = element(i, hi);
    eff.blocks.push_back(0.5 * (b + b.adjoint()));
  }
  for (const auto& t : h.inter) {
    if (t.i >= t.j || t.j >= p.count()) throw DimensionError("inter term indices out of order");
    eff.couplings.push_back({t.i, t.j, t.nu, element(t.i, t.V), element(t.j, t.W)});
  }
  eff.validate();
  return eff;
}

double extensiveness(const EffectiveHamiltonian& eff, std::size_t i) {
  if (i >= eff.subsystem_count()) throw DimensionError("subsystem index out of range");
  double e = matrix_norm(eff.blocks[i]);
  for (const auto& c : eff.couplings) {
    if (c.i == i || c.j == i) e += std::abs(c.nu) * matrix_norm(c.V) * matrix_norm(c.W);
  }
  return e;
}

PenaltyMode parse_penalty_mode(const std::string& s) {
  if (s == "ground") return PenaltyMode::Ground;
  if (s == "excited") return PenaltyMode::Excited;
  if (s == "unconditional") return PenaltyMode::Unconditional;
  throw PreconditionError("unknown penalty mode '" + s + "'");
}

std::string to_string(PenaltyMode m) {
  switch (m) {
    case PenaltyMode::Ground: return "ground";
    case PenaltyMode::Excited: return "excited";
    case PenaltyMode::Unconditional: return "unconditional";
  }
  return "ground";
}

PenaltyVector penalty_bounds(const EffectiveHamiltonian& eff, std::size_t n, double gap_estimate,
                             PenaltyMode mode) {
  if (!(gap_estimate >= 0.0)) throw PreconditionError("gap estimate must be nonnegative");
  const std::size_t count = eff.subsystem_count();
  std::vector<double> e(count);
  double sum = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    e[i] = extensiveness(eff, i);
    sum += e[i];
  }
  PenaltyVector pen;
  pen.level = n;
  pen.gap_estimate = gap_estimate;
  pen.mode = mode;
  for (std::size_t i = 0; i < count; ++i) {
    double bound = e[i];
    if (mode == PenaltyMode::Excited) bound += gap_estimate;
    if (mode == PenaltyMode::Unconditional) bound += 2.0 * sum;
    pen.lambda.push_back(bound + kPenaltyMargin * std::max(1.0, std::abs(bound)));
  }
  return pen;
}

PenaltyVector zero_penalties(const EffectiveHamiltonian& eff) {
  PenaltyVector pen;
  pen.lambda.assign(eff.subsystem_count(), 0.0);
  return pen;
}

std::size_t effective_qubits(std::size_t K) {
  if (K == 0) throw DimensionError("a subsystem needs at least one basis state");
  return static_cast<std::size_t>(std::bit_width(K - 1));
}

std::vector<std::size_t> qubit_padding(const EffectiveHamiltonian& eff) {
  std::vector<std::size_t> out;
  for (std::size_t K : eff.dims()) out.push_back(std::size_t{1} << effective_qubits(K));
  return out;
}

PauliSum embed_to_qubits(const EffectiveHamiltonian& eff, const PenaltyVector& penalties) {
  eff.validate();
  check_penalties(eff, penalties);
  const auto dims = qubit_padding(eff);
  std::vector<std::size_t> nq;
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  for (std::size_t d : dims) {
    offset.push_back(total);
    nq.push_back(static_cast<std::size_t>(std::countr_zero(d)));
    total += nq.back();
  }
  if (total > PauliString::kMaxQubits) throw ResourceError("effective model needs more than 64 qubits");
  PauliSum out = PauliSum::identity(total, eff.constant);
  for (std::size_t i = 0; i < eff.subsystem_count(); ++i) {
    out += dense_to_pauli_sum(pad(eff.blocks[i], dims[i], penalties.lambda[i])).embed(total, offset[i]);
  }
  for (const auto& [ij, op] : pair_operators(eff.couplings, dims)) {
    const auto [i, j] = ij;
    const PauliSum expanded = dense_to_pauli_sum(op);
    for (const auto& [s, c] : expanded.terms()) {
      const PauliString a = s.slice(0, nq[i]).embed(total, offset[i]);
      const PauliString b = s.slice(nq[i], nq[j]).embed(total, offset[j]);
      out.add(PauliString(total, a.x_mask() | b.x_mask(), a.z_mask() | b.z_mask()), c);
    }
  }
  return out;
}

MatVec embedded_operator(const EffectiveHamiltonian& eff, const PenaltyVector& penalties) {
  eff.validate();
  check_penalties(eff, penalties);
  const auto dims = qubit_padding(eff);
  auto op = std::make_shared<FactoredOperator>();
  op->constant = eff.constant;
  op->inner = strides_of(dims);
  for (std::size_t i = 0; i < dims.size(); ++i) {
    op->blocks.push_back(pad(eff.blocks[i], dims[i], penalties.lambda[i]).transpose());
  }
  for (const auto& c : eff.couplings) {
    op->pairs.push_back({c.i, c.j, (c.nu * pad(c.V, dims[c.i], 0.0)).transpose(), pad(c.W, dims[c.j], 0.0).transpose()});
  }
  return [op](const Vector& in, Vector& out) { (*op)(in, out); };
}

Matrix embed_dense(const EffectiveHamiltonian& eff, const PenaltyVector& penalties,
                   std::vector<std::size_t> padded) {
  eff.validate();
  check_penalties(eff, penalties);
  const auto dims = resolve_padding(eff, std::move(padded));
  return assemble(eff.blocks, eff.couplings, eff.constant, dims, penalties.lambda);
}

std::vector<double> block_spectrum_decomposition(const EffectiveHamiltonian& eff,
                                                 const PenaltyVector& penalties,
                                                 std::vector<std::size_t> padded) {
  eff.validate();
  check_penalties(eff, penalties);
  const auto dims = resolve_padding(eff, std::move(padded));
  const auto K = eff.dims();
  const std::size_t count = eff.subsystem_count();
  if (count >= 32) throw ResourceError("too many subsystems for a subset enumeration");
  std::vector<double> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << count); ++mask) {
    std::size_t mult = 1;
    double shift = 0.0;
    std::vector<std::size_t> keep(count, 0);
    std::vector<Matrix> blocks;
    for (std::size_t i = 0; i < count; ++i) {
      if (mask >> i & 1) {
        mult *= dims[i] - K[i];
        shift += penalties.lambda[i];
      } else {
        keep[i] = blocks.size();
        blocks.push_back(eff.blocks[i]);
      }
    }
    if (mult == 0) continue;
    std::vector<Coupling> couplings;
    for (const auto& c : eff.couplings) {
      if ((mask >> c.i & 1) || (mask >> c.j & 1)) continue;
      Coupling r = c;
      r.i = keep[c.i];
      r.j = keep[c.j];
      couplings.push_back(std::move(r));
    }
    std::vector<double> spec;
    if (blocks.empty()) {
      spec.push_back(eff.constant.real());
    } else {
      std::vector<std::size_t> d;
      for (const auto& b : blocks) d.push_back(static_cast<std::size_t>(b.rows()));
      const Matrix m = assemble(blocks, couplings, eff.constant, d, std::vector<double>(blocks.size(), 0.0));
      const RealVector ev = hermitian_eigen(m, false).values;
      spec.assign(ev.data(), ev.data() + ev.size());
    }
    for (double v : spec) out.insert(out.end(), mult, v + shift);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ResourceMetrics resource_metrics(const EffectiveHamiltonian& eff,
                                 const std::vector<std::size_t>& n_qubit_per_subsystem) {
  const auto K = eff.dims();
  if (n_qubit_per_subsystem.size() != K.size()) throw DimensionError("one qubit count per subsystem is required");
  ResourceMetrics m;
  double log_tr = 0.0;
  std::size_t widest = 0;
  std::size_t needed = 0;
  for (std::size_t i = 0; i < K.size(); ++i) {
    log_tr += std::log2(static_cast<double>(K[i])) - static_cast<double>(n_qubit_per_subsystem[i]);
    widest = std::max(widest, n_qubit_per_subsystem[i]);
    needed += effective_qubits(K[i]);
  }
  m.truncation_rate = std::exp2(log_tr);
  m.n_required = std::max(widest, needed);
  m.step3_qubits = needed;
  return m;
}

ResourceMetrics resource_metrics(const EffectiveHamiltonian& eff, std::size_t n_qubit_per_subsystem) {
  return resource_metrics(eff, std::vector<std::size_t>(eff.subsystem_count(), n_qubit_per_subsystem));
}

double first_order_gap(const EffectiveHamiltonian& eff, std::size_t n) {
  if (n == 0) return 0.0;
  eff.validate();
  const auto K = eff.dims();
  const std::size_t count = K.size();
  std::vector<HermitianEigen> local;
  for (const auto& b : eff.blocks) local.push_back(hermitian_eigen(b, true));

  auto product_state = [&](std::size_t which, Eigen::Index level) {
    Matrix v = Matrix::Ones(1, 1);
    for (std::size_t i = 0; i < count; ++i) {
      v = kron(v, local[i].vectors.col(i == which ? level : 0));
    }
    return Vector(v.col(0));
  };

  const Matrix h = eff.dense();
  const Vector ground = product_state(count, 0);
  const double e0 = (ground.adjoint() * h * ground)(0, 0).real();

  std::vector<Vector> singles;
  for (std::size_t i = 0; i < count; ++i) {
    for (Eigen::Index a = 1; a < static_cast<Eigen::Index>(K[i]); ++a) singles.push_back(product_state(i, a));
  }
  if (singles.empty()) return 0.0;
  Matrix P(h.rows(), static_cast<Eigen::Index>(singles.size()));
  for (std::size_t c = 0; c < singles.size(); ++c) P.col(static_cast<Eigen::Index>(c)) = singles[c];
  const Matrix proj = P.adjoint() * (h * P);
  const RealVector ev = hermitian_eigen(0.5 * (proj + proj.adjoint()), false).values;
  const auto idx = std::min<Eigen::Index>(static_cast<Eigen::Index>(n) - 1, ev.size() - 1);
  return std::max(0.0, ev(idx) - e0);
}

void to_json(nlohmann::json& j, const EffectiveHamiltonian& e) {
  j = nlohmann::json::object();
  j["constant"] = {e.constant.real(), e.constant.imag()};
  j["blocks"] = nlohmann::json::array();
  for (const auto& b : e.blocks) j["blocks"].push_back(matrix_to_json(b));
  j["couplings"] = nlohmann::json::array();
  for (const auto& c : e.couplings) {
    j["couplings"].push_back({{"i", c.i},
                              {"j", c.j},
                              {"nu", {c.nu.real(), c.nu.imag()}},
                              {"V", matrix_to_json(c.V)},
                              {"W", matrix_to_json(c.W)}});
  }
}

void from_json(const nlohmann::json& j, EffectiveHamiltonian& e) {
  e = EffectiveHamiltonian{};
  const auto& c0 = j.at("constant");
  e.constant = cplx(c0.at(0).get<double>(), c0.at(1).get<double>());
  for (const auto& b : j.at("blocks")) e.blocks.push_back(matrix_from_json(b));
  for (const auto& c : j.at("couplings")) {
    Coupling k;
    k.i = c.at("i").get<std::size_t>();
    k.j = c.at("j").get<std::size_t>();
    k.nu = cplx(c.at("nu").at(0).get<double>(), c.at("nu").at(1).get<double>());
    k.V = matrix_from_json(c.at("V"));
    k.W = matrix_from_json(c.at("W"));
    e.couplings.push_back(std::move(k));
  }
  e.validate();
}

}  // namespace deepvqe
