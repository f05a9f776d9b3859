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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "../support/generators.hpp"
#include "deepvqe/errors.hpp"
#include "deepvqe/statevector.hpp"

namespace deepvqe {
namespace {

using testing::Gen;

Matrix ry_matrix(double t) {
  Matrix m(2, 2);
  m << std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2);
  return m;
}

Matrix rz_matrix(double t) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = std::exp(cplx(0, -t / 2));
  m(1, 1) = std::exp(cplx(0, t / 2));
  return m;
}

// Single-qubit gate on qubit q of n (qubit 0 most significant).
Matrix lift(const Matrix& g, std::size_t q, std::size_t n) {
  Matrix m = Matrix::Ones(1, 1);
  for (std::size_t k = 0; k < n; ++k) m = kron(m, k == q ? g : Matrix(Matrix::Identity(2, 2)));
  return m;
}

Matrix cz_matrix(std::size_t a, std::size_t b, std::size_t n) {
  const auto dim = Eigen::Index{1} << n;
  Matrix m = Matrix::Identity(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const bool ba = (i >> (n - 1 - a)) & 1;
    const bool bb = (i >> (n - 1 - b)) & 1;
    if (ba && bb) m(i, i) = -1.0;
  }
  return m;
}

// Reference ansatz built from explicit matrices.
Vector reference_ansatz(const AnsatzSpec& spec, const std::vector<double>& p, const std::string& ref) {
  const std::size_t n = spec.n_qubits;
  Vector v = StateVector::from_bitstring(ref).amplitudes();
  for (std::size_t d = 0; d <= spec.depth; ++d) {
    for (std::size_t q = 0; q < n; ++q) v = lift(ry_matrix(p[2 * n * d + q]), q, n) * v;
    for (std::size_t q = 0; q < n; ++q) v = lift(rz_matrix(p[2 * n * d + n + q]), q, n) * v;
    if (d < spec.depth) {
      for (std::size_t q = 0; q + 1 < n; ++q) v = cz_matrix(q, q + 1, n) * v;
    }
  }
  return v;
}

TEST(StateVector, StartsInZeroAndBitstringsIndexMsbFirst) {
  const StateVector s(3);
  EXPECT_EQ(s.amplitudes()(0), cplx(1.0));
  const StateVector b = StateVector::from_bitstring("011");
  EXPECT_EQ(b.amplitudes()(3), cplx(1.0));
  EXPECT_THROW(StateVector::from_bitstring("0a1"), ShapeError);
  EXPECT_THROW(StateVector(31), ResourceError);
}

TEST(StateVector, GatesMatchMatrices) {
  Gen g(21);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + g.index(4);
    const Vector v0 = g.state(std::size_t{1} << n);
    StateVector s(n, v0);
    const std::size_t q = g.index(n);
    const double a = g.angle();
    s.ry(q, a);
    EXPECT_NEAR((s.amplitudes() - lift(ry_matrix(a), q, n) * v0).norm(), 0.0, 1e-13);
    StateVector z(n, v0);
    z.rz(q, a);
    EXPECT_NEAR((z.amplitudes() - lift(rz_matrix(a), q, n) * v0).norm(), 0.0, 1e-13);
    if (n >= 2) {
      StateVector c(n, v0);
      c.cz_ladder();
      Matrix ladder = Matrix::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n);
      for (std::size_t k = 0; k + 1 < n; ++k) ladder = cz_matrix(k, k + 1, n) * ladder;
      EXPECT_NEAR((c.amplitudes() - ladder * v0).norm(), 0.0, 1e-13);
    }
  }
}

TEST(StateVector, NormPreservedByCircuits) {
  Gen g(22);
  for (int t = 0; t < 30; ++t) {
    const AnsatzSpec spec{1 + g.index(5), g.index(4)};
    const StateVector s = run_ansatz(spec, g.angles(spec.parameter_count()));
    EXPECT_NEAR(s.norm(), 1.0, 1e-12);
  }
}

TEST(Ansatz, ParameterCountAndShapeError) {
  const AnsatzSpec spec{4, 3};
  EXPECT_EQ(spec.parameter_count(), 2u * 4u * 4u);
  EXPECT_THROW(run_ansatz(spec, std::vector<double>(5)), ShapeError);
  EXPECT_THROW(run_ansatz(spec, std::vector<double>(32), "01"), ShapeError);
}

TEST(Ansatz, MatchesExplicitMatrixConstruction) {
  Gen g(23);
  for (int t = 0; t < 15; ++t) {
    const AnsatzSpec spec{1 + g.index(4), g.index(3)};
    const auto p = g.angles(spec.parameter_count());
    std::string ref(spec.n_qubits, '0');
    for (auto& c : ref) c = g.coin() ? '1' : '0';
    EXPECT_NEAR((run_ansatz(spec, p, ref).amplitudes() - reference_ansatz(spec, p, ref)).norm(), 0.0, 1e-12);
  }
}

TEST(Ansatz, ExpectationMatchesDense) {
  Gen g(24);
  const PauliSum h = g.pauli_sum(3, 10, true);
  const StateVector s(3, g.state(8));
  const Vector& v = s.amplitudes();
  EXPECT_NEAR(std::abs(expectation(s, h) - v.dot(to_dense(h) * v)), 0.0, 1e-12);
}

TEST(Gradient, AllModesAgree) {
  Gen g(25);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = 2 + g.index(3);
    const AnsatzSpec spec{n, 1 + g.index(3)};
    const PauliSum h = g.pauli_sum(n, 6, true);
    std::string r0(n, '0');
    std::string r1 = r0;
    r1.back() = '1';
    const AnsatzObjective obj(spec, h, {r0, r1}, {2.0, 1.0});
    const auto p = g.angles(spec.parameter_count());
    const auto ps = obj.gradient(p, GradientMode::ParameterShift);
    const auto ad = obj.gradient(p, GradientMode::Adjoint);
    const auto fd = obj.gradient(p, GradientMode::FiniteDifference, 1e-5);
    for (std::size_t k = 0; k < p.size(); ++k) {
      EXPECT_NEAR(ps[k], ad[k], 1e-10);
      EXPECT_NEAR(ps[k], fd[k], 1e-6);
    }
    std::vector<double> grad;
    const double v = obj.evaluate(p, &grad, GradientMode::Adjoint, 1e-5);
    EXPECT_NEAR(v, obj.value(p), 1e-12);
  }
}

TEST(Gradient, WeightedCostIsSumOfEnergies) {
  Gen g(26);
  const AnsatzSpec spec{3, 2};
  const PauliSum h = g.pauli_sum(3, 6, true);
  const AnsatzObjective obj(spec, h, {"000", "001"}, {7.0, 2.0});
  const auto p = g.angles(spec.parameter_count());
  const auto e = obj.energies(p);
  ASSERT_EQ(e.size(), 2u);
  EXPECT_NEAR(obj.value(p), 7.0 * e[0] + 2.0 * e[1], 1e-12);
}

}  // namespace
}  // namespace deepvqe
