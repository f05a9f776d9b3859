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

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace deepvqe {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Largest |A - A^dagger| entry.
double hermiticity_defect(const Matrix& m);

/// Spectral norm of an arbitrary complex matrix.
double spectral_norm(const Matrix& m);

/// Kronecker product a (x) b, with `a` acting on the more significant index.
Matrix kron(const Matrix& a, const Matrix& b);

struct HermitianEigen {
  RealVector values;  // ascending
  Matrix vectors;     // columns; empty when not requested
};

/// Eigendecomposition of a hermitian matrix (lower triangle is read).
/// Uses the real symmetric solver when every imaginary part is exactly zero.
HermitianEigen hermitian_eigen(const Matrix& m, bool want_vectors);

using MatVec = std::function<void(const Vector& in, Vector& out)>;

struct LanczosOptions {
  std::size_t max_krylov = 200;
  double tolerance = 1e-8;  // on ||A x - theta x||
  std::size_t max_restarts = 40;
  std::uint64_t seed = 0x5eed;
};

struct LanczosResult {
  std::vector<double> values;  // ascending
  std::vector<Vector> vectors;
  std::vector<double> residuals;
};

/// Lowest `k` eigenpairs of a hermitian operator given only through its
/// action. Full reorthogonalization; converged pairs are locked one at a time
/// and deflated from later Krylov spaces, so degenerate levels are resolved
/// with their multiplicity. Throws IterationError on non-convergence.
LanczosResult lanczos_lowest(const MatVec& apply, std::size_t dim, std::size_t k,
                             const LanczosOptions& options = {});

/// SplitMix64 step; used to derive independent child seeds from one run seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace deepvqe
