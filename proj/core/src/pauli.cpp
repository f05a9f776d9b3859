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

#include "deepvqe/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "deepvqe/errors.hpp"

namespace deepvqe {

namespace {

constexpr cplx kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

int pc(std::uint64_t v) { return std::popcount(v); }

std::uint64_t low_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void check_width(std::size_t n) {
  if (n > PauliString::kMaxQubits) {
    throw ResourceError("Pauli strings are limited to 64 qubits, got " + std::to_string(n));
  }
}

void require_same(std::size_t a, std::size_t b, const char* where) {
  if (a != b) {
    throw DimensionError(std::string(where) + ": qubit counts differ (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

PauliString::PauliString(std::size_t n_qubits) : n_(n_qubits) { check_width(n_qubits); }

PauliString::PauliString(std::size_t n_qubits, std::uint64_t x_mask, std::uint64_t z_mask)
    : n_(n_qubits), x_(x_mask), z_(z_mask) {
  check_width(n_qubits);
  if (((x_ | z_) & ~low_mask(n_)) != 0) throw DimensionError("Pauli mask has bits beyond n_qubits");
}

PauliString PauliString::parse(std::string_view letters) {
  PauliString s(letters.size());
  for (std::size_t q = 0; q < letters.size(); ++q) s.set(q, letters[q]);
  return s;
}

PauliString PauliString::single(std::size_t n_qubits, std::size_t qubit, char letter) {
  PauliString s(n_qubits);
  s.set(qubit, letter);
  return s;
}

std::size_t PauliString::weight() const noexcept { return static_cast<std::size_t>(pc(x_ | z_)); }

char PauliString::letter(std::size_t qubit) const {
  if (qubit >= n_) throw DimensionError("qubit index out of range");
  const bool x = (x_ & bit(qubit)) != 0;
  const bool z = (z_ & bit(qubit)) != 0;
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

void PauliString::set(std::size_t qubit, char letter) {
  if (qubit >= n_) throw DimensionError("qubit index out of range");
  const std::uint64_t b = bit(qubit);
  x_ &= ~b;
  z_ &= ~b;
  switch (letter) {
    case 'I': break;
    case 'X': x_ |= b; break;
    case 'Z': z_ |= b; break;
    case 'Y': x_ |= b; z_ |= b; break;
    default: throw ParseError(std::string("unknown Pauli letter '") + letter + "'", 1);
  }
}

std::string PauliString::str() const {
  std::string out(n_, 'I');
  for (std::size_t q = 0; q < n_; ++q) out[q] = letter(q);
  return out;
}

PauliString PauliString::embed(std::size_t total_qubits, std::size_t offset) const {
  if (offset + n_ > total_qubits) throw DimensionError("embed: string does not fit in register");
  const std::size_t shift = total_qubits - offset - n_;
  return PauliString(total_qubits, x_ << shift, z_ << shift);
}

PauliString PauliString::slice(std::size_t offset, std::size_t count) const {
  if (offset + count > n_) throw DimensionError("slice: range exceeds register");
  const std::size_t shift = n_ - offset - count;
  const std::uint64_t m = low_mask(count);
  return PauliString(count, (x_ >> shift) & m, (z_ >> shift) & m);
}

PauliString PauliString::tensor(const PauliString& other) const {
  check_width(n_ + other.n_);
  const std::size_t nb = other.n_;
  const auto shl = [nb](std::uint64_t v) { return nb >= 64 ? 0 : v << nb; };
  return PauliString(n_ + nb, shl(x_) | other.x_, shl(z_) | other.z_);
}

PauliProduct pauli_mul(const PauliString& a, const PauliString& b) {
  require_same(a.n_qubits(), b.n_qubits(), "pauli_mul");
  const std::uint64_t xr = a.x_mask() ^ b.x_mask();
  const std::uint64_t zr = a.z_mask() ^ b.z_mask();
  const int e = pc(a.x_mask() & a.z_mask()) + pc(b.x_mask() & b.z_mask()) +
                2 * pc(a.z_mask() & b.x_mask()) - pc(xr & zr);
  return {kPhase[((e % 4) + 4) % 4], PauliString(a.n_qubits(), xr, zr)};
}

// ---------------------------------------------------------------------------

PauliSum::PauliSum(std::size_t n_qubits) : n_(n_qubits) { check_width(n_qubits); }

PauliSum::PauliSum(const PauliString& s, cplx coefficient) : n_(s.n_qubits()) {
  add(s, coefficient);
}

PauliSum PauliSum::identity(std::size_t n_qubits, cplx coefficient) {
  return PauliSum(PauliString(n_qubits), coefficient);
}

cplx PauliSum::coefficient(const PauliString& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? cplx{} : it->second;
}

void PauliSum::add(const PauliString& s, cplx coefficient) {
  require_same(n_, s.n_qubits(), "PauliSum::add");
  auto [it, inserted] = terms_.try_emplace(s, coefficient);
  if (!inserted) it->second += coefficient;
  if (std::abs(it->second) < kDropTolerance) terms_.erase(it);
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (terms_.empty() && n_ == 0) n_ = other.n_;
  for (const auto& [s, c] : other.terms_) add(s, c);
  require_same(n_, other.n_, "PauliSum::operator+=");
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  if (terms_.empty() && n_ == 0) n_ = other.n_;
  for (const auto& [s, c] : other.terms_) add(s, -c);
  require_same(n_, other.n_, "PauliSum::operator-=");
  return *this;
}

PauliSum& PauliSum::operator*=(cplx scalar) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= scalar;
    if (std::abs(it->second) < kDropTolerance) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  require_same(a.n_, b.n_, "PauliSum::operator*");
  // Accumulate before dropping so cancellations across partial sums are exact.
  std::map<PauliString, cplx> acc;
  for (const auto& [sa, ca] : a.terms_) {
    for (const auto& [sb, cb] : b.terms_) {
      const auto [phase, prod] = pauli_mul(sa, sb);
      acc[prod] += phase * ca * cb;
    }
  }
  PauliSum out(a.n_);
  for (const auto& [s, c] : acc) {
    if (std::abs(c) >= PauliSum::kDropTolerance) out.terms_.emplace(s, c);
  }
  return out;
}

PauliSum PauliSum::adjoint() const {
  PauliSum out(n_);
  for (const auto& [s, c] : terms_) out.terms_.emplace(s, std::conj(c));
  return out;
}

bool PauliSum::is_hermitian(double tol) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [tol](const auto& t) { return std::abs(t.second.imag()) <= tol; });
}

double PauliSum::one_norm() const {
  double s = 0.0;
  for (const auto& t : terms_) s += std::abs(t.second);
  return s;
}

bool PauliSum::approx_equal(const PauliSum& other, double tol) const {
  if (n_ != other.n_) return false;
  for (const auto& [s, c] : terms_) {
    if (std::abs(c - other.coefficient(s)) > tol) return false;
  }
  for (const auto& [s, c] : other.terms_) {
    if (std::abs(c - coefficient(s)) > tol) return false;
  }
  return true;
}

PauliSum PauliSum::embed(std::size_t total_qubits, std::size_t offset) const {
  PauliSum out(total_qubits);
  for (const auto& [s, c] : terms_) out.terms_.emplace(s.embed(total_qubits, offset), c);
  return out;
}

PauliSum PauliSum::tensor(const PauliSum& other) const {
  PauliSum out(n_ + other.n_);
  for (const auto& [sa, ca] : terms_) {
    for (const auto& [sb, cb] : other.terms_) out.add(sa.tensor(sb), ca * cb);
  }
  return out;
}

std::vector<std::size_t> PauliSum::support() const {
  std::uint64_t used = 0;
  for (const auto& t : terms_) used |= t.first.x_mask() | t.first.z_mask();
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < n_; ++q) {
    if (used & (std::uint64_t{1} << (n_ - 1 - q))) out.push_back(q);
  }
  return out;
}

// ---------------------------------------------------------------------------

Matrix to_dense(const PauliSum& s, std::size_t dense_limit) {
  const std::size_t n = s.n_qubits();
  if (n > dense_limit) {
    throw ResourceError("to_dense: " + std::to_string(n) + " qubits exceeds the dense limit of " +
                        std::to_string(dense_limit));
  }
  const std::size_t dim = std::size_t{1} << n;
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const auto& [p, c] : s.terms()) {
    const cplx base = c * kPhase[pc(p.x_mask() & p.z_mask()) % 4];
    for (std::size_t i = 0; i < dim; ++i) {
      const double sign = (pc(p.z_mask() & i) & 1) ? -1.0 : 1.0;
      m(static_cast<Eigen::Index>(i ^ p.x_mask()), static_cast<Eigen::Index>(i)) += sign * base;
    }
  }
  return m;
}

PauliSum dense_to_pauli_sum(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionError("dense_to_pauli_sum: matrix must be square and nonempty");
  }
  const auto dim = static_cast<std::size_t>(m.rows());
  if (!std::has_single_bit(dim)) {
    throw DimensionError("dense_to_pauli_sum: dimension " + std::to_string(dim) +
                         " is not a power of two");
  }
  const auto n = static_cast<std::size_t>(std::countr_zero(dim));
  PauliSum out(n);
  std::vector<cplx> f(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t j = 0; j < dim; ++j) {
      f[j] = m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j ^ x));
    }
    // In-place Walsh-Hadamard transform: f(z) <- sum_j (-1)^{z.j} f(j).
    for (std::size_t h = 1; h < dim; h <<= 1) {
      for (std::size_t i = 0; i < dim; i += 2 * h) {
        for (std::size_t j = i; j < i + h; ++j) {
          const cplx a = f[j];
          const cplx b = f[j + h];
          f[j] = a + b;
          f[j + h] = a - b;
        }
      }
    }
    for (std::size_t z = 0; z < dim; ++z) {
      const cplx c = kPhase[pc(x & z) % 4] * f[z] / static_cast<double>(dim);
      if (std::abs(c) >= PauliSum::kDropTolerance) out.add(PauliString(n, x, z), c);
    }
  }
  return out;
}

void apply(const PauliSum& s, const Vector& in, Vector& out) {
  const std::size_t dim = std::size_t{1} << s.n_qubits();
  if (static_cast<std::size_t>(in.size()) != dim) throw DimensionError("apply: vector length mismatch");
  out = Vector::Zero(in.size());
  for (const auto& [p, c] : s.terms()) {
    const cplx base = c * kPhase[pc(p.x_mask() & p.z_mask()) % 4];
    for (std::size_t i = 0; i < dim; ++i) {
      const double sign = (pc(p.z_mask() & i) & 1) ? -1.0 : 1.0;
      out(static_cast<Eigen::Index>(i ^ p.x_mask())) += sign * base * in(static_cast<Eigen::Index>(i));
    }
  }
}

double op_norm(const PauliSum& s, std::size_t dense_limit) {
  if (s.empty()) return 0.0;
  if (s.n_qubits() <= dense_limit) {
    const Matrix m = to_dense(s, dense_limit);
    if (s.is_hermitian()) {
      const RealVector ev = hermitian_eigen(m, false).values;
      return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
    }
    return spectral_norm(m);
  }
  const std::size_t dim = std::size_t{1} << s.n_qubits();
  if (s.is_hermitian()) {
    const CompiledPauliSum h(s);
    const CompiledPauliSum neg(s * cplx(-1.0));
    const double lo = lanczos_lowest([&](const Vector& a, Vector& b) { h.apply(a, b); }, dim, 1).values[0];
    const double hi = -lanczos_lowest([&](const Vector& a, Vector& b) { neg.apply(a, b); }, dim, 1).values[0];
    return std::max(std::abs(lo), std::abs(hi));
  }
  const CompiledPauliSum gram(s.adjoint() * s * cplx(-1.0));
  const double top = -lanczos_lowest([&](const Vector& a, Vector& b) { gram.apply(a, b); }, dim, 1).values[0];
  return std::sqrt(std::max(0.0, top));
}

// ---------------------------------------------------------------------------

namespace {
constexpr std::size_t kDiagonalBudgetBytes = std::size_t{256} << 20;
}  // namespace

CompiledPauliSum::CompiledPauliSum(const PauliSum& s) : n_(s.n_qubits()) {
  const std::size_t dim = dimension();
  std::map<std::uint64_t, std::vector<std::pair<std::uint64_t, cplx>>> by_flip;
  for (const auto& [p, c] : s.terms()) {
    by_flip[p.x_mask()].emplace_back(p.z_mask(), c * kPhase[pc(p.x_mask() & p.z_mask()) % 4]);
  }
  if (by_flip.size() * dim * sizeof(cplx) > kDiagonalBudgetBytes) {
    throw ResourceError("CompiledPauliSum: diagonal storage exceeds the memory budget");
  }
  groups_.reserve(by_flip.size());
  for (const auto& [flip, zs] : by_flip) {
    Group g{flip, std::vector<cplx>(dim)};
    std::vector<cplx>& d = g.diagonal;
    if (zs.size() * 4 < n_ + 1) {
      for (const auto& [z, c] : zs) {
        for (std::size_t i = 0; i < dim; ++i) d[i] += (pc(z & i) & 1) ? -c : c;
      }
    } else {
      // d(i) = sum_z c_z (-1)^{z.i} is a Walsh-Hadamard transform of c.
      for (const auto& [z, c] : zs) d[z] += c;
      for (std::size_t h = 1; h < dim; h <<= 1) {
        for (std::size_t i = 0; i < dim; i += 2 * h) {
          for (std::size_t j = i; j < i + h; ++j) {
            const cplx a = d[j];
            d[j] = a + d[j + h];
            d[j + h] = a - d[j + h];
          }
        }
      }
    }
    groups_.push_back(std::move(g));
  }
}

void CompiledPauliSum::apply(const Vector& in, Vector& out) const {
  const std::size_t dim = dimension();
  if (static_cast<std::size_t>(in.size()) != dim) throw DimensionError("apply: vector length mismatch");
  out.setZero(in.size());
  const cplx* src = in.data();
  cplx* dst = out.data();
  for (const auto& g : groups_) {
    const cplx* d = g.diagonal.data();
    const std::uint64_t f = g.flip;
    for (std::size_t i = 0; i < dim; ++i) dst[i ^ f] += d[i] * src[i];
  }
}

cplx CompiledPauliSum::expectation(const Vector& psi) const {
  const std::size_t dim = dimension();
  if (static_cast<std::size_t>(psi.size()) != dim) throw DimensionError("expectation: vector length mismatch");
  const cplx* a = psi.data();
  cplx total{};
  for (const auto& g : groups_) {
    const cplx* d = g.diagonal.data();
    const std::uint64_t f = g.flip;
    cplx acc{};
    for (std::size_t i = 0; i < dim; ++i) acc += std::conj(a[i ^ f]) * d[i] * a[i];
    total += acc;
  }
  return total;
}

// ---------------------------------------------------------------------------

void to_json(nlohmann::json& j, const PauliSum& s) {
  j = nlohmann::json::object();
  j["n_qubits"] = s.n_qubits();
  auto terms = nlohmann::json::array();
  for (const auto& [p, c] : s.terms()) {
    terms.push_back({{"string", p.str()}, {"re", c.real()}, {"im", c.imag()}});
  }
  j["terms"] = std::move(terms);
}

void from_json(const nlohmann::json& j, PauliSum& s) {
  const auto n = j.at("n_qubits").get<std::size_t>();
  PauliSum out(n);
  for (const auto& t : j.at("terms")) {
    const auto letters = t.at("string").get<std::string>();
    if (letters.size() != n) throw DimensionError("Pauli string length differs from n_qubits");
    out.add(PauliString::parse(letters), cplx(t.at("re").get<double>(), t.value("im", 0.0)));
  }
  s = std::move(out);
}

}  // namespace deepvqe
