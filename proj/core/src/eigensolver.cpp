// Copyright 2026 The pagt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pagt/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "pagt/errors.hpp"

namespace pagt {

namespace {

template <typename Scalar>
VectorOf<Scalar> random_vector(Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  VectorOf<Scalar> v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if constexpr (std::is_same_v<Scalar, double>)
      v[i] = g(rng);
    else
      v[i] = Scalar(g(rng), g(rng));
  }
  return v.normalized();
}

template <typename Matrix>
EigenResult dense_impl(const Matrix& m, int count) {
  if (m.rows() != m.cols()) throw InvalidArgument("eigenvalues of a non-square matrix");
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw ConvergenceError("dense eigensolver failed", NAN);
  const auto k = std::min<Eigen::Index>(count, m.rows());
  EigenResult r;
  r.values = es.eigenvalues().head(k);
  r.dense = true;
  return r;
}

}  // namespace

EigenResult dense_lowest(const RealMatrix& m, int count) { return dense_impl(m, count); }
EigenResult dense_lowest(const ComplexMatrix& m, int count) { return dense_impl(m, count); }

template <typename Scalar>
EigenResult lanczos_lowest(const LinearOperator<Scalar>& op, Index dim, int count, const EigensolverPolicy& policy) {
  using Vec = VectorOf<Scalar>;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (count < 1) throw InvalidArgument("need at least one eigenvalue");
  if (dim == 0) throw InvalidArgument("empty operator");
  const auto n = static_cast<Eigen::Index>(dim);
  const int want = static_cast<int>(std::min<Index>(static_cast<Index>(count), dim));
  const auto m = static_cast<Eigen::Index>(
      std::min<Index>(dim, static_cast<Index>(std::max(policy.krylov_dim, 2 * want + 8))));
  const auto keep = std::min<Eigen::Index>(m - 2, std::max<Eigen::Index>(want + 4, m / 3));

  std::mt19937_64 rng(policy.seed);
  Mat V(n, m);
  Mat T = Mat::Zero(m, m);
  V.col(0) = random_vector<Scalar>(dim, rng);
  Vec w(n);
  Eigen::Index start = 0;
  EigenResult result;
  double worst = INFINITY;

  for (int restart = 0; restart <= policy.max_restarts; ++restart) {
    double beta = 0.0;
    Eigen::Index k = m;
    for (Eigen::Index j = start; j < m; ++j) {
      op(V.col(j), w);
      ++result.iterations;
      // two passes of classical Gram-Schmidt keep the basis orthonormal
      Vec h = V.leftCols(j + 1).adjoint() * w;
      w.noalias() -= V.leftCols(j + 1) * h;
      Vec h2 = V.leftCols(j + 1).adjoint() * w;
      w.noalias() -= V.leftCols(j + 1) * h2;
      h += h2;
      T.col(j).head(j + 1) = h;
      T.row(j).head(j + 1) = h.adjoint();
      beta = w.norm();
      if (j + 1 == m) break;
      if (beta < 1e-13) {
        // invariant subspace: continue from a fresh orthogonal direction
        if (j + 1 == n) {
          k = j + 1;
          break;
        }
        Vec r = random_vector<Scalar>(dim, rng);
        for (int pass = 0; pass < 2; ++pass) r -= V.leftCols(j + 1) * (V.leftCols(j + 1).adjoint() * r);
        V.col(j + 1) = r.normalized();
        beta = 0.0;
        continue;
      }
      V.col(j + 1) = w / beta;
    }

    Eigen::SelfAdjointEigenSolver<Mat> es(T.topLeftCorner(k, k));
    if (es.info() != Eigen::Success) throw ConvergenceError("projected eigenproblem failed", NAN);
    const RealVector theta = es.eigenvalues();
    const Mat& Y = es.eigenvectors();

    worst = 0.0;
    for (int i = 0; i < want; ++i) {
      const double res = beta * std::abs(Y(k - 1, i));
      worst = std::max(worst, res / std::max(1.0, std::abs(theta[i])));
    }
    if (worst <= policy.tol || k == n) {
      result.values = theta.head(want);
      result.residual = worst;
      return result;
    }

    // thick restart: keep the lowest Ritz vectors and append the residual
    const Eigen::Index kk = std::min(keep, k - 1);
    Mat ritz = V.leftCols(k) * Y.leftCols(kk);
    V.leftCols(kk) = ritz;
    T.setZero();
    for (Eigen::Index i = 0; i < kk; ++i) T(i, i) = theta[i];
    V.col(kk) = w / beta;
    start = kk;
    // the projection of the restarted column restores the coupling row
    op(V.col(kk), w);
    ++result.iterations;
    Vec h = V.leftCols(kk + 1).adjoint() * w;
    w.noalias() -= V.leftCols(kk + 1) * h;
    Vec h2 = V.leftCols(kk + 1).adjoint() * w;
    w.noalias() -= V.leftCols(kk + 1) * h2;
    h += h2;
    T.col(kk).head(kk + 1) = h;
    T.row(kk).head(kk + 1) = h.adjoint();
    const double b = w.norm();
    if (b < 1e-13) {
      Vec r = random_vector<Scalar>(dim, rng);
      for (int pass = 0; pass < 2; ++pass) r -= V.leftCols(kk + 1) * (V.leftCols(kk + 1).adjoint() * r);
      V.col(kk + 1) = r.normalized();
    } else {
      V.col(kk + 1) = w / b;
    }
    start = kk + 1;
  }
  throw ConvergenceError("Lanczos did not converge", worst);
}

template EigenResult lanczos_lowest<double>(const LinearOperator<double>&, Index, int, const EigensolverPolicy&);
template EigenResult lanczos_lowest<Complex>(const LinearOperator<Complex>&, Index, int, const EigensolverPolicy&);

EigenResult lowest_eigenvalues(const RealSparse& m, int count, const EigensolverPolicy& policy) {
  const auto dim = static_cast<Index>(m.rows());
  if (dim <= policy.dense_max_dim) return dense_lowest(RealMatrix(m), count);
  LinearOperator<double> op = [&m](const RealVector& x, RealVector& y) { y.noalias() = m * x; };
  return lanczos_lowest<double>(op, dim, std::max(count, policy.n_lowest), policy);
}

}  // namespace pagt
