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

#include "deepvqe/coarse_grain.hpp"

#include <bit>
#include <cmath>

#include <nlohmann/json.hpp>

#include "deepvqe/errors.hpp"

namespace deepvqe {

void ExcitationSet::validate() const {
  if (operators.empty()) throw PreconditionError("excitation set is empty");
  if (!labels.empty() && labels.size() != operators.size()) {
    throw ShapeError("excitation set needs one label per operator");
  }
  for (const auto& op : operators) {
    if (op.n_qubits() != n_qubits) {
      throw DimensionError("excitation operator on " + std::to_string(op.n_qubits()) +
                           " qubits, subsystem has " + std::to_string(n_qubits));
    }
  }
  if (!operators[0].approx_equal(PauliSum::identity(n_qubits), 1e-12)) {
    throw PreconditionError("the first excitation operator must be the identity");
  }
}

namespace {

void check_refs(const std::vector<StateVector>& refs, const ExcitationSet& ops) {
  if (refs.empty()) throw PreconditionError("at least one reference state is required");
  ops.validate();
  for (const auto& r : refs) {
    if (r.n_qubits() != ops.n_qubits) {
      throw DimensionError("reference state has " + std::to_string(r.n_qubits()) +
                           " qubits, excitation set has " + std::to_string(ops.n_qubits));
    }
  }
}

// Columns P_k |psi_m> in raw order m*|ops| + k.
Matrix raw_states(const std::vector<StateVector>& refs, const ExcitationSet& ops) {
  const auto dim = static_cast<Eigen::Index>(refs.front().dimension());
  const std::size_t nops = ops.size();
  Matrix phi(dim, static_cast<Eigen::Index>(refs.size() * nops));
  Vector out;
  for (std::size_t m = 0; m < refs.size(); ++m) {
    for (std::size_t k = 0; k < nops; ++k) {
      apply(ops.operators[k], refs[m].amplitudes(), out);
      phi.col(static_cast<Eigen::Index>(m * nops + k)) = out;
    }
  }
  return phi;
}

}  // namespace

cplx transition_element(const StateVector& bra, const PauliSum& O, const StateVector& ket) {
  if (bra.n_qubits() != O.n_qubits() || ket.n_qubits() != O.n_qubits()) {
    throw DimensionError("transition_element: qubit counts differ");
  }
  static constexpr cplx kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const std::size_t dim = bra.dimension();
  const cplx* a = bra.amplitudes().data();
  const cplx* b = ket.amplitudes().data();
  cplx total{};
  for (const auto& [p, c] : O.terms()) {
    const std::uint64_t x = p.x_mask();
    const std::uint64_t z = p.z_mask();
    cplx acc{};
    for (std::size_t i = 0; i < dim; ++i) {
      const cplx v = std::conj(a[i ^ x]) * b[i];
      acc += (std::popcount(z & i) & 1) ? -v : v;
    }
    total += c * kPhase[std::popcount(x & z) % 4] * acc;
  }
  return total;
}

Matrix gram_matrix(const std::vector<StateVector>& refs, const ExcitationSet& ops) {
  check_refs(refs, ops);
  const Matrix phi = raw_states(refs, ops);
  Matrix g = phi.adjoint() * phi;
  return 0.5 * (g + g.adjoint());
}

Orthonormalization orthonormalize(const Matrix& G, double tol) {
  if (G.rows() != G.cols() || G.rows() == 0) throw DimensionError("Gram matrix must be square and nonempty");
  const double scale = std::max(1.0, G.cwiseAbs().maxCoeff());
  if (hermiticity_defect(G) > 1e-10 * scale) throw DimensionError("Gram matrix is not hermitian");
  const Matrix h = 0.5 * (G + G.adjoint());
  HermitianEigen eig = hermitian_eigen(h, true);
  const double top = eig.values(eig.values.size() - 1);
  Orthonormalization out;
  out.gram_eigenvalues = eig.values;
  if (!(top > 0.0)) throw DegenerateBasisError("Gram matrix has no positive eigenvalue");
  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = eig.values.size(); i-- > 0;) {
    if (eig.values(i) > tol * top) kept.push_back(i);
  }
  out.K = kept.size();
  out.S.resize(G.rows(), static_cast<Eigen::Index>(kept.size()));
  for (std::size_t c = 0; c < kept.size(); ++c) {
    const Eigen::Index i = kept[c];
    out.S.col(static_cast<Eigen::Index>(c)) = eig.vectors.col(i) / std::sqrt(eig.values(i));
  }
  return out;
}

Matrix raw_matrix_elements(const std::vector<StateVector>& refs, const ExcitationSet& ops,
                           const PauliSum& A, ElementMethod method) {
  check_refs(refs, ops);
  if (A.n_qubits() != ops.n_qubits) {
    throw SupportError("operator is written on " + std::to_string(A.n_qubits()) +
                       " qubits, subsystem register has " + std::to_string(ops.n_qubits));
  }
  const std::size_t nops = ops.size();
  const auto raw = static_cast<Eigen::Index>(refs.size() * nops);
  if (method == ElementMethod::StateProjection) {
    const Matrix phi = raw_states(refs, ops);
    const CompiledPauliSum a(A);
    Matrix aphi(phi.rows(), phi.cols());
    Vector out;
    for (Eigen::Index c = 0; c < phi.cols(); ++c) {
      a.apply(phi.col(c), out);
      aphi.col(c) = out;
    }
    return phi.adjoint() * aphi;
  }
  std::vector<PauliSum> a_p;
  a_p.reserve(nops);
  for (const auto& p : ops.operators) a_p.push_back(A * p);
  std::vector<PauliSum> p_dag;
  p_dag.reserve(nops);
  for (const auto& p : ops.operators) p_dag.push_back(p.adjoint());
  Matrix out(raw, raw);
  for (std::size_t m = 0; m < refs.size(); ++m) {
    for (std::size_t k = 0; k < nops; ++k) {
      for (std::size_t n = 0; n < refs.size(); ++n) {
        for (std::size_t l = 0; l < nops; ++l) {
          out(static_cast<Eigen::Index>(m * nops + k), static_cast<Eigen::Index>(n * nops + l)) =
              transition_element(refs[m], p_dag[k] * a_p[l], refs[n]);
        }
      }
    }
  }
  return out;
}

Matrix matrix_elements(const std::vector<StateVector>& refs, const ExcitationSet& ops,
                       const Matrix& S, const PauliSum& A, ElementMethod method) {
  const Matrix raw = raw_matrix_elements(refs, ops, A, method);
  if (S.rows() != raw.rows()) throw DimensionError("S does not match the raw basis dimension");
  return S.adjoint() * raw * S;
}

Matrix matrix_elements(const LocalBasis& basis, const PauliSum& A, ElementMethod method) {
  return matrix_elements(basis.references, basis.excitations, basis.S, A, method);
}

Matrix basis_states(const LocalBasis& basis) {
  return raw_states(basis.references, basis.excitations) * basis.S;
}

LocalBasis build_local_basis(const StateVector& ref, ExcitationSet ops, double tol) {
  return multi_state_basis({ref}, std::move(ops), tol);
}

LocalBasis multi_state_basis(std::vector<StateVector> refs, ExcitationSet ops, double tol) {
  check_refs(refs, ops);
  for (std::size_t a = 0; a < refs.size(); ++a) {
    for (std::size_t b = 0; b < refs.size(); ++b) {
      const double want = a == b ? 1.0 : 0.0;
      if (std::abs(overlap(refs[a], refs[b]) - want) > 1e-8) {
        throw PreconditionError("reference states must be orthonormal within 1e-8");
      }
    }
  }
  LocalBasis basis;
  basis.subsystem = ops.subsystem;
  basis.gram = gram_matrix(refs, ops);
  Orthonormalization o = orthonormalize(basis.gram, tol);
  basis.S = std::move(o.S);
  basis.K = o.K;
  basis.rank_tolerance = tol;
  basis.references = std::move(refs);
  basis.excitations = std::move(ops);
  return basis;
}

PauliSum restrict_to_subsystem(const PauliSum& global, std::size_t offset, std::size_t size) {
  if (offset + size > global.n_qubits()) throw DimensionError("subsystem range exceeds register");
  PauliSum out(size);
  for (const auto& [p, c] : global.terms()) {
    const PauliString local = p.slice(offset, size);
    if (local.embed(global.n_qubits(), offset) != p) {
      throw SupportError("term " + p.str() + " acts outside qubits " + std::to_string(offset + 1) +
                         ".." + std::to_string(offset + size));
    }
    out.add(local, c);
  }
  return out;
}

// ---------------------------------------------------------------------------

nlohmann::json matrix_to_json(const Matrix& m) {
  auto data = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) data.push_back({m(r, c).real(), m(r, c).imag()});
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Matrix matrix_from_json(const nlohmann::json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto& data = j.at("data");
  if (static_cast<Eigen::Index>(data.size()) != rows * cols) throw ShapeError("matrix data length mismatch");
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto& e = data[static_cast<std::size_t>(r * cols + c)];
      m(r, c) = cplx(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return m;
}

void to_json(nlohmann::json& j, const ExcitationSet& e) {
  j = {{"subsystem", e.subsystem}, {"n_qubits", e.n_qubits}, {"kind", e.kind},
       {"labels", e.labels},       {"operators", e.operators}};
}

void from_json(const nlohmann::json& j, ExcitationSet& e) {
  ExcitationSet out;
  out.subsystem = j.at("subsystem").get<std::size_t>();
  out.n_qubits = j.at("n_qubits").get<std::size_t>();
  out.kind = j.value("kind", std::string{});
  out.labels = j.value("labels", std::vector<std::string>{});
  out.operators = j.at("operators").get<std::vector<PauliSum>>();
  out.validate();
  e = std::move(out);
}

void to_json(nlohmann::json& j, const LocalBasis& b) {
  auto refs = nlohmann::json::array();
  for (const auto& r : b.references) {
    Matrix col = r.amplitudes();
    refs.push_back(matrix_to_json(col));
  }
  j = {{"subsystem", b.subsystem},
       {"K", b.K},
       {"rank_tolerance", b.rank_tolerance},
       {"S", matrix_to_json(b.S)},
       {"excitations", b.excitations},
       {"references", std::move(refs)}};
}

LocalBasis local_basis_from_json(const nlohmann::json& j) {
  LocalBasis b;
  b.subsystem = j.at("subsystem").get<std::size_t>();
  b.K = j.at("K").get<std::size_t>();
  b.rank_tolerance = j.at("rank_tolerance").get<double>();
  b.S = matrix_from_json(j.at("S"));
  b.excitations = j.at("excitations").get<ExcitationSet>();
  for (const auto& r : j.at("references")) {
    Matrix col = matrix_from_json(r);
    b.references.emplace_back(b.excitations.n_qubits, Vector(col.col(0)));
  }
  if (static_cast<std::size_t>(b.S.cols()) != b.K || static_cast<std::size_t>(b.S.rows()) != b.raw_dimension()) {
    throw ShapeError("stored S does not match K and the raw dimension");
  }
  b.gram = gram_matrix(b.references, b.excitations);
  return b;
}

}  // namespace deepvqe
