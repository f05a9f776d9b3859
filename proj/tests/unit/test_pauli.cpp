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

#include <nlohmann/json.hpp>

#include "../support/generators.hpp"
#include "deepvqe/errors.hpp"
#include "deepvqe/pauli.hpp"

namespace deepvqe {
namespace {

using testing::Gen;

Matrix single(char c) {
  Matrix m(2, 2);
  switch (c) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, cplx(0, -1), cplx(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m << 1, 0, 0, 1; break;
  }
  return m;
}

// Textbook Kronecker construction, qubit 0 leftmost.
Matrix reference_dense(const PauliString& s) {
  Matrix m = Matrix::Ones(1, 1);
  for (std::size_t q = 0; q < s.n_qubits(); ++q) m = kron(m, single(s.letter(q)));
  return m;
}

Matrix reference_dense(const PauliSum& h) {
  const auto dim = Eigen::Index{1} << h.n_qubits();
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto& [s, c] : h.terms()) m += c * reference_dense(s);
  return m;
}

TEST(PauliString, ParseAndPrintRoundTrip) {
  for (const char* text : {"I", "XYZI", "ZZZZZ", "IXIY"}) {
    EXPECT_EQ(PauliString::parse(text).str(), text);
  }
  EXPECT_THROW(PauliString::parse("XQ"), ParseError);
}

TEST(PauliString, SingleQubitMultiplicationTable) {
  struct Row {
    const char* a;
    const char* b;
    cplx phase;
    const char* out;
  };
  const cplx i{0, 1};
  const Row rows[] = {{"X", "Y", i, "Z"},  {"Y", "Z", i, "X"},  {"Z", "X", i, "Y"},
                      {"Y", "X", -i, "Z"}, {"Z", "Y", -i, "X"}, {"X", "Z", -i, "Y"},
                      {"X", "X", 1.0, "I"}, {"Y", "Y", 1.0, "I"}, {"I", "Z", 1.0, "Z"}};
  for (const auto& r : rows) {
    const PauliProduct p = pauli_mul(PauliString::parse(r.a), PauliString::parse(r.b));
    EXPECT_EQ(p.product.str(), r.out) << r.a << r.b;
    EXPECT_NEAR(std::abs(p.phase - r.phase), 0.0, 1e-15) << r.a << r.b;
  }
}

TEST(PauliString, DenseMatchesKroneckerOracle) {
  Gen g(11);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + g.index(4);
    const PauliString s = g.pauli_string(n);
    EXPECT_NEAR((to_dense(PauliSum(s)) - reference_dense(s)).norm(), 0.0, 1e-14) << s.str();
  }
}

TEST(PauliString, EmbedSliceTensor) {
  const PauliString a = PauliString::parse("XY");
  EXPECT_EQ(a.embed(5, 2).str(), "IIXYI");
  EXPECT_EQ(PauliString::parse("IZXYI").slice(1, 3).str(), "ZXY");
  EXPECT_EQ(a.tensor(PauliString::parse("Z")).str(), "XYZ");
  EXPECT_THROW(a.embed(3, 2), DimensionError);
}

TEST(PauliSum, ProductMatchesDenseProduct) {
  Gen g(12);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + g.index(4);
    const PauliSum a = g.pauli_sum(n, 1 + g.index(6), false);
    const PauliSum b = g.pauli_sum(n, 1 + g.index(6), false);
    EXPECT_NEAR((to_dense(a * b) - reference_dense(a) * reference_dense(b)).norm(), 0.0, 1e-12);
  }
}

TEST(PauliSum, AlgebraicIdentities) {
  Gen g(13);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + g.index(4);
    const PauliSum a = g.pauli_sum(n, 5, false);
    const PauliSum b = g.pauli_sum(n, 5, false);
    const PauliSum c = g.pauli_sum(n, 5, false);
    EXPECT_TRUE(((a * b) * c).approx_equal(a * (b * c), 1e-12));
    EXPECT_TRUE((a * (b + c)).approx_equal(a * b + a * c, 1e-12));
    EXPECT_TRUE((a * b).adjoint().approx_equal(b.adjoint() * a.adjoint(), 1e-12));
    EXPECT_TRUE((a - a).empty());
  }
}

TEST(PauliSum, HermiticityAndNorms) {
  Gen g(14);
  const PauliSum h = g.pauli_sum(3, 8, true);
  EXPECT_TRUE(h.is_hermitian());
  PauliSum nh = h;
  nh.add(PauliString::parse("XYZ"), cplx(0, 0.3));
  EXPECT_FALSE(nh.is_hermitian());
  const Matrix d = reference_dense(h);
  const RealVector ev = hermitian_eigen(d, false).values;
  EXPECT_NEAR(op_norm(h), std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1))), 1e-12);
  EXPECT_GE(h.one_norm() + 1e-12, op_norm(h));
}

TEST(PauliSum, DenseToPauliRoundTrip) {
  Gen g(15);
  for (std::size_t n = 0; n <= 4; ++n) {
    const Matrix m = g.matrix(std::size_t{1} << n);
    EXPECT_NEAR((to_dense(dense_to_pauli_sum(m)) - m).norm(), 0.0, 1e-12);
  }
  EXPECT_THROW(dense_to_pauli_sum(Matrix::Zero(3, 3)), DimensionError);
}

TEST(PauliSum, DenseLimitIsEnforced) {
  EXPECT_THROW(to_dense(PauliSum::identity(kDenseLimit + 1)), ResourceError);
}

TEST(PauliSum, MatrixFreeApplyMatchesDense) {
  Gen g(16);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + g.index(6);
    const PauliSum h = g.pauli_sum(n, 1 + g.index(20), false);
    const Vector v = g.state(std::size_t{1} << n);
    Vector out;
    apply(h, v, out);
    const Vector want = reference_dense(h) * v;
    EXPECT_NEAR((out - want).norm(), 0.0, 1e-12);
    const CompiledPauliSum c(h);
    Vector out2;
    c.apply(v, out2);
    EXPECT_NEAR((out2 - want).norm(), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(c.expectation(v) - v.dot(want)), 0.0, 1e-12);
  }
}

TEST(PauliSum, CompiledManyTermsUsesTransform) {
  Gen g(17);
  const PauliSum h = g.pauli_sum(5, 400, true);
  const Vector v = g.state(32);
  Vector out;
  CompiledPauliSum(h).apply(v, out);
  EXPECT_NEAR((out - reference_dense(h) * v).norm(), 0.0, 1e-11);
}

TEST(PauliSum, JsonRoundTrip) {
  Gen g(18);
  const PauliSum h = g.pauli_sum(4, 10, false);
  const nlohmann::json j = h;
  EXPECT_EQ(j.get<PauliSum>(), h);
}

TEST(PauliSum, TensorAndEmbedAgreeWithKron) {
  Gen g(19);
  const PauliSum a = g.pauli_sum(2, 4, false);
  const PauliSum b = g.pauli_sum(1, 3, false);
  EXPECT_NEAR((to_dense(a.tensor(b)) - kron(to_dense(a), to_dense(b))).norm(), 0.0, 1e-12);
  const Matrix embedded = to_dense(b.embed(3, 1));
  EXPECT_NEAR((embedded - kron(kron(Matrix::Identity(2, 2), to_dense(b)), Matrix::Identity(2, 2))).norm(), 0.0,
              1e-12);
}

}  // namespace
}  // namespace deepvqe
