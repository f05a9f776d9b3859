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

#include "deepvqe/statevector.hpp"

#include <bit>
#include <cmath>
#include <memory>
#include <numbers>

#include "deepvqe/errors.hpp"

namespace deepvqe {

namespace {

std::uint64_t index_bit(std::size_t n, std::size_t qubit) {
  if (qubit >= n) throw DimensionError("qubit index out of range");
  return std::uint64_t{1} << (n - 1 - qubit);
}

void check_bits(std::string_view bits, std::size_t n) {
  if (bits.size() != n) {
    throw ShapeError("reference bitstring has length " + std::to_string(bits.size()) +
                     ", expected " + std::to_string(n));
  }
  for (char c : bits) {
    if (c != '0' && c != '1') throw ShapeError("reference bitstring must contain only 0 and 1");
  }
}

}  // namespace

StateVector::StateVector(std::size_t n_qubits) : n_(n_qubits) {
  if (n_qubits > 30) throw ResourceError("statevector too large: " + std::to_string(n_qubits) + " qubits");
  amps_ = Vector::Zero(Eigen::Index{1} << n_qubits);
  amps_(0) = 1.0;
}

StateVector::StateVector(std::size_t n_qubits, Vector amplitudes)
    : n_(n_qubits), amps_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amps_.size()) != (std::size_t{1} << n_qubits)) {
    throw DimensionError("amplitude vector length is not 2^n_qubits");
  }
}

StateVector StateVector::from_bitstring(std::string_view bits) {
  check_bits(bits, bits.size());
  StateVector s(bits.size());
  std::size_t index = 0;
  for (char c : bits) index = (index << 1) | static_cast<std::size_t>(c == '1');
  s.amps_(0) = 0.0;
  s.amps_(static_cast<Eigen::Index>(index)) = 1.0;
  return s;
}

void StateVector::ry(std::size_t qubit, double theta) {
  const std::uint64_t b = index_bit(n_, qubit);
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const std::size_t dim = dimension();
  cplx* a = amps_.data();
  for (std::size_t base = 0; base < dim; base += 2 * b) {
    for (std::size_t i = base; i < base + b; ++i) {
      const cplx a0 = a[i];
      const cplx a1 = a[i | b];
      a[i] = c * a0 - s * a1;
      a[i | b] = s * a0 + c * a1;
    }
  }
}

void StateVector::rz(std::size_t qubit, double theta) {
  const std::uint64_t b = index_bit(n_, qubit);
  const cplx lo = std::polar(1.0, -0.5 * theta);
  const cplx hi = std::conj(lo);
  const std::size_t dim = dimension();
  cplx* a = amps_.data();
  for (std::size_t base = 0; base < dim; base += 2 * b) {
    for (std::size_t i = base; i < base + b; ++i) {
      a[i] *= lo;
      a[i | b] *= hi;
    }
  }
}

void StateVector::cz(std::size_t qa, std::size_t qb) {
  const std::uint64_t mask = index_bit(n_, qa) | index_bit(n_, qb);
  if (qa == qb) throw PreconditionError("cz needs two distinct qubits");
  const std::size_t dim = dimension();
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & mask) == mask) amps_(static_cast<Eigen::Index>(i)) = -amps_(static_cast<Eigen::Index>(i));
  }
}

void StateVector::cz_ladder() {
  if (n_ < 2) return;
  const std::uint64_t mask = (std::uint64_t{1} << (n_ - 1)) - 1;
  const std::size_t dim = dimension();
  cplx* a = amps_.data();
  for (std::size_t i = 0; i < dim; ++i) {
    if (std::popcount(i & (i >> 1) & mask) & 1) a[i] = -a[i];
  }
}

void StateVector::apply_pauli(const PauliString& p) {
  if (p.n_qubits() != n_) throw DimensionError("apply_pauli: qubit counts differ");
  Vector out;
  apply(PauliSum(p), amps_, out);
  amps_ = std::move(out);
}

cplx overlap(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits()) throw DimensionError("overlap: qubit counts differ");
  return a.amplitudes().dot(b.amplitudes());
}

cplx expectation(const StateVector& state, const PauliSum& observable) {
  if (state.n_qubits() != observable.n_qubits()) {
    throw DimensionError("expectation: qubit counts differ");
  }
  const std::size_t dim = state.dimension();
  const cplx* a = state.amplitudes().data();
  cplx total{};
  for (const auto& [p, c] : observable.terms()) {
    const std::uint64_t x = p.x_mask();
    const std::uint64_t z = p.z_mask();
    cplx acc{};
    for (std::size_t i = 0; i < dim; ++i) {
      const cplx v = std::conj(a[i ^ x]) * a[i];
      acc += (std::popcount(z & i) & 1) ? -v : v;
    }
    static constexpr cplx kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    total += c * kPhase[std::popcount(x & z) % 4] * acc;
  }
  return total;
}

// ---------------------------------------------------------------------------

namespace {

void check_params(const AnsatzSpec& spec, const std::vector<double>& params) {
  if (params.size() != spec.parameter_count()) {
    throw ShapeError("ansatz expects " + std::to_string(spec.parameter_count()) +
                     " parameters, got " + std::to_string(params.size()));
  }
}

StateVector reference_state(const AnsatzSpec& spec, std::string_view reference) {
  if (reference.empty()) return StateVector(spec.n_qubits);
  check_bits(reference, spec.n_qubits);
  return StateVector::from_bitstring(reference);
}

void rotation_layer(StateVector& s, const std::vector<double>& params, std::size_t layer) {
  const std::size_t n = s.n_qubits();
  const std::size_t off = 2 * n * layer;
  for (std::size_t q = 0; q < n; ++q) s.ry(q, params[off + q]);
  for (std::size_t q = 0; q < n; ++q) s.rz(q, params[off + n + q]);
}

void forward(const AnsatzSpec& spec, const std::vector<double>& params, StateVector& s) {
  for (std::size_t d = 0; d <= spec.depth; ++d) {
    rotation_layer(s, params, d);
    if (d < spec.depth) s.cz_ladder();
  }
}

// <l| Y_q |p>
cplx y_element(const Vector& l, const Vector& p, std::uint64_t b) {
  const std::size_t dim = static_cast<std::size_t>(l.size());
  const cplx* lv = l.data();
  const cplx* pv = p.data();
  cplx acc{};
  for (std::size_t base = 0; base < dim; base += 2 * b) {
    for (std::size_t i = base; i < base + b; ++i) {
      acc += std::conj(lv[i | b]) * pv[i] - std::conj(lv[i]) * pv[i | b];
    }
  }
  return cplx(0, 1) * acc;
}

// <l| Z_q |p>
cplx z_element(const Vector& l, const Vector& p, std::uint64_t b) {
  const std::size_t dim = static_cast<std::size_t>(l.size());
  const cplx* lv = l.data();
  const cplx* pv = p.data();
  cplx acc{};
  for (std::size_t base = 0; base < dim; base += 2 * b) {
    for (std::size_t i = base; i < base + b; ++i) {
      acc += std::conj(lv[i]) * pv[i] - std::conj(lv[i | b]) * pv[i | b];
    }
  }
  return acc;
}

}  // namespace

StateVector run_ansatz(const AnsatzSpec& spec, const std::vector<double>& params,
                       std::string_view reference) {
  check_params(spec, params);
  StateVector s = reference_state(spec, reference);
  forward(spec, params, s);
  return s;
}

AnsatzObjective::AnsatzObjective(AnsatzSpec spec, const PauliSum& h,
                                 std::vector<std::string> references, std::vector<double> weights)
    : AnsatzObjective(spec, MatVec{}, std::move(references), std::move(weights)) {
  if (h.n_qubits() != spec.n_qubits) throw DimensionError("ansatz and Hamiltonian qubit counts differ");
  auto op = std::make_shared<const CompiledPauliSum>(h);
  h_ = [op](const Vector& in, Vector& out) { op->apply(in, out); };
}

AnsatzObjective::AnsatzObjective(AnsatzSpec spec, MatVec h, std::vector<std::string> references,
                                 std::vector<double> weights)
    : spec_(spec), h_(std::move(h)), refs_(std::move(references)), weights_(std::move(weights)) {
  if (refs_.empty()) refs_.emplace_back(spec.n_qubits, '0');
  if (weights_.empty()) weights_.assign(refs_.size(), 1.0);
  if (weights_.size() != refs_.size()) throw ShapeError("one weight per reference is required");
  for (const auto& r : refs_) check_bits(r, spec.n_qubits);
}

std::vector<double> AnsatzObjective::energies(const std::vector<double>& params) const {
  check_params(spec_, params);
  std::vector<double> out;
  out.reserve(refs_.size());
  for (const auto& r : refs_) {
    StateVector s = StateVector::from_bitstring(r);
    forward(spec_, params, s);
    out.push_back(energy(s.amplitudes()));
  }
  return out;
}

double AnsatzObjective::energy(const Vector& psi) const {
  Vector hpsi;
  h_(psi, hpsi);
  return psi.dot(hpsi).real();
}

double AnsatzObjective::value(const std::vector<double>& params) const {
  const auto e = energies(params);
  double v = 0.0;
  for (std::size_t r = 0; r < e.size(); ++r) v += weights_[r] * e[r];
  return v;
}

std::vector<double> AnsatzObjective::gradient(const std::vector<double>& params, GradientMode mode,
                                              double fd_step) const {
  check_params(spec_, params);
  std::vector<double> g(params.size());
  if (mode == GradientMode::Adjoint) {
    adjoint(params, g);
    return g;
  }
  std::vector<double> p = params;
  const double shift = mode == GradientMode::ParameterShift ? 0.5 * std::numbers::pi : fd_step;
  const double scale = mode == GradientMode::ParameterShift ? 0.5 : 0.5 / fd_step;
  for (std::size_t k = 0; k < params.size(); ++k) {
    p[k] = params[k] + shift;
    const double up = value(p);
    p[k] = params[k] - shift;
    const double down = value(p);
    p[k] = params[k];
    g[k] = scale * (up - down);
  }
  return g;
}

// Reverse-mode sweep: for a gate exp(-i theta G / 2) the derivative of
// <psi|H|psi> is Im <lambda| G |phi>, where phi is the state right after the
// gate and lambda is H|psi> pulled back through the later gates.
double AnsatzObjective::adjoint(const std::vector<double>& params, std::vector<double>& g) const {
  const std::size_t n = spec_.n_qubits;
  g.assign(params.size(), 0.0);
  double cost = 0.0;
  for (std::size_t r = 0; r < refs_.size(); ++r) {
    StateVector phi = StateVector::from_bitstring(refs_[r]);
    forward(spec_, params, phi);
    Vector hl;
    h_(phi.amplitudes(), hl);
    StateVector lambda(n, std::move(hl));
    const double w = weights_[r];
    cost += w * phi.amplitudes().dot(lambda.amplitudes()).real();
    for (std::size_t dd = spec_.depth + 1; dd-- > 0;) {
      const std::size_t off = 2 * n * dd;
      for (std::size_t q = n; q-- > 0;) {
        const std::uint64_t b = index_bit(n, q);
        g[off + n + q] += w * z_element(lambda.amplitudes(), phi.amplitudes(), b).imag();
        phi.rz(q, -params[off + n + q]);
        lambda.rz(q, -params[off + n + q]);
      }
      for (std::size_t q = n; q-- > 0;) {
        const std::uint64_t b = index_bit(n, q);
        g[off + q] += w * y_element(lambda.amplitudes(), phi.amplitudes(), b).imag();
        phi.ry(q, -params[off + q]);
        lambda.ry(q, -params[off + q]);
      }
      if (dd > 0) {
        phi.cz_ladder();
        lambda.cz_ladder();
      }
    }
  }
  return cost;
}

double AnsatzObjective::evaluate(const std::vector<double>& params, std::vector<double>* grad,
                                 GradientMode mode, double fd_step) const {
  check_params(spec_, params);
  if (grad == nullptr) return value(params);
  if (mode == GradientMode::Adjoint) return adjoint(params, *grad);
  *grad = gradient(params, mode, fd_step);
  return value(params);
}

}  // namespace deepvqe
