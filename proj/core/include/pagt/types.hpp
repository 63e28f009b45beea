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

#include <complex>
#include <cstdint>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace pagt {

using Complex = std::complex<double>;
using Index = std::uint64_t;

using Matrix2 = Eigen::Matrix2cd;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;
using RealSparse = Eigen::SparseMatrix<double, Eigen::RowMajor>;
using ComplexSparse = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr Complex kI{0.0, 1.0};

}  // namespace pagt
