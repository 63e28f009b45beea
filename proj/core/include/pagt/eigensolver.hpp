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

#pragma once

#include <cstdint>
#include <functional>

#include "pagt/types.hpp"

namespace pagt {

struct EigensolverPolicy {
  Index dense_max_dim = 1024;  // dense solve at or below this dimension
  int n_lowest = 4;            // eigenvalues resolved by the iterative solver
  int krylov_dim = 64;
  double tol = 1e-10;          // residual tolerance, relative to max(1, |theta|)
  int max_restarts = 500;
  std::uint64_t seed = 20260101;
};

template <typename Scalar>
using VectorOf = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using LinearOperator = std::function<void(const VectorOf<Scalar>&, VectorOf<Scalar>&)>;

struct EigenResult {
  RealVector values;      // ascending
  double residual = 0.0;  // largest residual norm among the returned pairs
  int iterations = 0;     // matrix-vector products, zero for dense solves
  bool dense = false;
};

/// Thick-restart Lanczos with full reorthogonalization for the `count`
/// lowest eigenvalues of a Hermitian operator. Throws ConvergenceError.
template <typename Scalar>
EigenResult lanczos_lowest(const LinearOperator<Scalar>& op, Index dim, int count, const EigensolverPolicy& policy);

EigenResult dense_lowest(const RealMatrix& m, int count);
EigenResult dense_lowest(const ComplexMatrix& m, int count);

/// Lowest `count` eigenvalues with the dense/iterative crossover of `policy`.
EigenResult lowest_eigenvalues(const RealSparse& m, int count, const EigensolverPolicy& policy);

extern template EigenResult lanczos_lowest<double>(const LinearOperator<double>&, Index, int,
                                                   const EigensolverPolicy&);
extern template EigenResult lanczos_lowest<Complex>(const LinearOperator<Complex>&, Index, int,
                                                    const EigensolverPolicy&);

}  // namespace pagt
