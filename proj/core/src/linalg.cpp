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

#include "deepvqe/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "deepvqe/errors.hpp"

namespace deepvqe {

double hermiticity_defect(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("hermiticity_defect: matrix is not square");
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

HermitianEigen hermitian_eigen(const Matrix& m, bool want_vectors) {
  if (m.rows() != m.cols()) throw DimensionError("hermitian_eigen: matrix is not square");
  HermitianEigen out;
  if (m.size() == 0) return out;
  const int opts = want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly;
  if (m.imag().cwiseAbs().maxCoeff() == 0.0) {
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(m.real(), opts);
    if (es.info() != Eigen::Success) throw NumericError("hermitian_eigen: real solver failed");
    out.values = es.eigenvalues();
    if (want_vectors) out.vectors = es.eigenvectors().cast<cplx>();
    return out;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, opts);
  if (es.info() != Eigen::Success) throw NumericError("hermitian_eigen: complex solver failed");
  out.values = es.eigenvalues();
  if (want_vectors) out.vectors = es.eigenvectors();
  return out;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

Vector random_vector(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = cplx(normal(rng), normal(rng));
  return v;
}

void project_out(Vector& w, const std::vector<Vector>& basis) {
  for (const auto& q : basis) w -= q * q.dot(w);
}

struct RitzPair {
  double value;
  Vector vector;
  double residual_estimate;
};

// One Lanczos sweep from `start` (normalized, orthogonal to `locked`).
RitzPair lanczos_sweep(const MatVec& apply, std::size_t dim, const Vector& start,
                       const std::vector<Vector>& locked, const LanczosOptions& options) {
  const std::size_t m_max = std::min(options.max_krylov, dim - locked.size());
  std::vector<Vector> basis;
  basis.reserve(m_max);
  std::vector<double> alpha;
  std::vector<double> beta;
  basis.push_back(start);

  Vector w(static_cast<Eigen::Index>(dim));
  RealVector ritz_y;
  double theta = 0.0;
  double residual = std::numeric_limits<double>::infinity();

  for (std::size_t j = 0; j < m_max; ++j) {
    apply(basis[j], w);
    const double a = basis[j].dot(w).real();
    w -= a * basis[j];
    if (j > 0) w -= beta[j - 1] * basis[j - 1];
    for (int pass = 0; pass < 2; ++pass) {
      project_out(w, basis);
      project_out(w, locked);
    }
    alpha.push_back(a);
    const double b = w.norm();

    const bool last = (j + 1 == m_max);
    const bool breakdown = b < 1e-12;
    if (last || breakdown || (j + 1) % 5 == 0) {
      const auto m = static_cast<Eigen::Index>(j + 1);
      RealVector diag = Eigen::Map<const RealVector>(alpha.data(), m);
      RealVector sub = m > 1 ? RealVector(Eigen::Map<const RealVector>(beta.data(), m - 1))
                             : RealVector(0);
      Eigen::SelfAdjointEigenSolver<RealMatrix> tri;
      tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
      theta = tri.eigenvalues()(0);
      ritz_y = tri.eigenvectors().col(0);
      residual = b * std::abs(ritz_y(m - 1));
      if (residual < 0.1 * options.tolerance || breakdown || last) break;
    }
    beta.push_back(b);
    basis.push_back(w / b);
  }

  Vector x = Vector::Zero(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < ritz_y.size(); ++i) x += ritz_y(i) * basis[static_cast<std::size_t>(i)];
  project_out(x, locked);
  x.normalize();
  return {theta, std::move(x), residual};
}

}  // namespace

LanczosResult lanczos_lowest(const MatVec& apply, std::size_t dim, std::size_t k,
                             const LanczosOptions& options) {
  if (k == 0) throw PreconditionError("lanczos_lowest: k must be at least 1");
  if (k > dim) throw PreconditionError("lanczos_lowest: k exceeds the operator dimension");
  if (options.max_krylov < 2) throw PreconditionError("lanczos_lowest: Krylov dimension below 2");

  std::mt19937_64 rng(options.seed);
  LanczosResult out;
  Vector w(static_cast<Eigen::Index>(dim));

  while (out.values.size() < k) {
    Vector start = random_vector(dim, rng);
    project_out(start, out.vectors);
    project_out(start, out.vectors);
    start.normalize();

    bool locked = false;
    double last_residual = std::numeric_limits<double>::infinity();
    for (std::size_t restart = 0; restart <= options.max_restarts; ++restart) {
      RitzPair pair = lanczos_sweep(apply, dim, start, out.vectors, options);
      apply(pair.vector, w);
      pair.value = pair.vector.dot(w).real();
      last_residual = (w - pair.value * pair.vector).norm();
      if (last_residual < options.tolerance) {
        out.values.push_back(pair.value);
        out.vectors.push_back(std::move(pair.vector));
        out.residuals.push_back(last_residual);
        locked = true;
        break;
      }
      start = std::move(pair.vector);
    }
    if (!locked) {
      std::ostringstream msg;
      msg << "Lanczos did not converge for eigenvalue " << out.values.size()
          << " (residual " << last_residual << ", tolerance " << options.tolerance << ")";
      throw IterationError(msg.str());
    }
  }

  std::vector<std::size_t> order(out.values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return out.values[a] < out.values[b]; });
  LanczosResult sorted;
  for (std::size_t i : order) {
    sorted.values.push_back(out.values[i]);
    sorted.vectors.push_back(std::move(out.vectors[i]));
    sorted.residuals.push_back(out.residuals[i]);
  }
  return sorted;
}

}  // namespace deepvqe
