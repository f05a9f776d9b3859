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

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "deepvqe/linalg.hpp"

namespace deepvqe {

/// Largest register converted to a dense 2^n x 2^n matrix.
inline constexpr std::size_t kDenseLimit = 13;

/// A tensor product of single-qubit Paulis on `n_qubits` qubits.
///
/// Stored as an (x, z) bit pair per qubit, so that the letter on a qubit is
/// I=(0,0), X=(1,0), Z=(0,1), Y=(1,1) and the operator equals
/// i^{popcount(x & z)} X^x Z^z. Qubit 0 is the leftmost letter and maps to the
/// most significant bit of a computational-basis index; the masks are stored
/// in that index space so applying a string to amplitudes needs no remapping.
class PauliString {
 public:
  static constexpr std::size_t kMaxQubits = 64;

  PauliString() = default;
  explicit PauliString(std::size_t n_qubits);
  PauliString(std::size_t n_qubits, std::uint64_t x_mask, std::uint64_t z_mask);

  /// Parses letters such as "XIZY"; qubit 0 first.
  static PauliString parse(std::string_view letters);
  static PauliString single(std::size_t n_qubits, std::size_t qubit, char letter);

  std::size_t n_qubits() const noexcept { return n_; }
  std::uint64_t x_mask() const noexcept { return x_; }
  std::uint64_t z_mask() const noexcept { return z_; }
  bool is_identity() const noexcept { return (x_ | z_) == 0; }
  std::size_t weight() const noexcept;

  char letter(std::size_t qubit) const;
  void set(std::size_t qubit, char letter);
  std::string str() const;

  /// Index-space bit of `qubit`.
  std::uint64_t bit(std::size_t qubit) const noexcept { return std::uint64_t{1} << (n_ - 1 - qubit); }

  /// Places this string on qubits [offset, offset + n_qubits()) of a larger register.
  PauliString embed(std::size_t total_qubits, std::size_t offset) const;
  /// The letters on qubits [offset, offset + count).
  PauliString slice(std::size_t offset, std::size_t count) const;
  /// this (x) other, with `other` on the trailing qubits.
  PauliString tensor(const PauliString& other) const;

  friend auto operator<=>(const PauliString&, const PauliString&) = default;

 private:
  std::size_t n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

struct PauliProduct {
  cplx phase;  // one of 1, i, -1, -i
  PauliString product;
};

/// a * b as phase * product.
PauliProduct pauli_mul(const PauliString& a, const PauliString& b);

/// Weighted sum of Pauli strings with complex coefficients.
///
/// Coefficients whose magnitude drops below kDropTolerance are erased, so the
/// stored term count is deterministic under repeated algebra.
class PauliSum {
 public:
  static constexpr double kDropTolerance = 1e-12;
  using Terms = std::map<PauliString, cplx>;

  PauliSum() = default;
  explicit PauliSum(std::size_t n_qubits);
  PauliSum(const PauliString& s, cplx coefficient = 1.0);

  static PauliSum identity(std::size_t n_qubits, cplx coefficient = 1.0);

  std::size_t n_qubits() const noexcept { return n_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  const Terms& terms() const noexcept { return terms_; }
  cplx coefficient(const PauliString& s) const;

  void add(const PauliString& s, cplx coefficient);

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(cplx scalar);

  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(PauliSum a, cplx s) { return a *= s; }
  friend PauliSum operator*(cplx s, PauliSum a) { return a *= s; }
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);
  friend bool operator==(const PauliSum&, const PauliSum&) = default;

  PauliSum adjoint() const;
  /// Every coefficient real within `tol`.
  bool is_hermitian(double tol = kDropTolerance) const;
  /// Sum of |coefficient|, an upper bound on the operator norm.
  double one_norm() const;
  /// Largest coefficient difference is at most `tol`.
  bool approx_equal(const PauliSum& other, double tol) const;

  PauliSum embed(std::size_t total_qubits, std::size_t offset) const;
  /// this (x) other, with `other` on the trailing qubits.
  PauliSum tensor(const PauliSum& other) const;
  /// Qubits on which at least one term acts nontrivially, ascending.
  std::vector<std::size_t> support() const;

 private:
  std::size_t n_ = 0;
  Terms terms_;
};

/// Dense 2^n x 2^n matrix. Throws ResourceError above `dense_limit` qubits.
Matrix to_dense(const PauliSum& s, std::size_t dense_limit = kDenseLimit);

/// Pauli decomposition of a 2^n x 2^n matrix; the coefficient of P is
/// Tr(P m) / 2^n. Throws DimensionError for other shapes.
PauliSum dense_to_pauli_sum(const Matrix& m);

/// Operator norm. Dense up to `dense_limit` qubits, Lanczos above.
double op_norm(const PauliSum& s, std::size_t dense_limit = kDenseLimit);

/// out = s * in without forming a matrix.
void apply(const PauliSum& s, const Vector& in, Vector& out);

/// PauliSum regrouped by flip mask for repeated application.
///
/// All terms sharing an X-mask act as one diagonal followed by a bit flip, so
/// application costs (number of distinct X-masks) * 2^n. Immutable after
/// construction and safe for concurrent readers. Throws ResourceError when
/// the per-group diagonals would exceed 256 MiB.
class CompiledPauliSum {
 public:
  CompiledPauliSum() = default;
  explicit CompiledPauliSum(const PauliSum& s);

  std::size_t n_qubits() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return std::size_t{1} << n_; }
  std::size_t group_count() const noexcept { return groups_.size(); }

  /// out = H * in.
  void apply(const Vector& in, Vector& out) const;
  /// <psi| H |psi>.
  cplx expectation(const Vector& psi) const;

 private:
  struct Group {
    std::uint64_t flip;
    std::vector<cplx> diagonal;
  };
  std::size_t n_ = 0;
  std::vector<Group> groups_;
};

void to_json(nlohmann::json& j, const PauliSum& s);
void from_json(const nlohmann::json& j, PauliSum& s);

}  // namespace deepvqe
