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

#include <string>

#include "pagt/types.hpp"

namespace pagt {

/// A validated 2x2 unitary.
class SingleQubitUnitary {
 public:
  explicit SingleQubitUnitary(const Matrix2& m, double tol = kDefaultTolerance);

  static SingleQubitUnitary identity();
  static SingleQubitUnitary pauli_x();
  static SingleQubitUnitary pauli_y();
  static SingleQubitUnitary pauli_z();
  static SingleQubitUnitary hadamard();
  static SingleQubitUnitary phase_s();
  static SingleQubitUnitary phase_t();
  /// diag(e^{-i theta/2}, e^{i theta/2})
  static SingleQubitUnitary rz(double theta);
  /// [[cos(theta/2), -sin(theta/2)], [sin(theta/2), cos(theta/2)]]
  static SingleQubitUnitary ry(double theta);
  /// Planar rotation by theta, the real orthogonal matrix of angle theta.
  static SingleQubitUnitary rotation(double theta);

  /// Parses "I", "X", "Y", "Z", "H", "S", "T", "Rz(theta)", "Ry(theta)", "R(theta)".
  static SingleQubitUnitary named(const std::string& name);

  const Matrix2& matrix() const noexcept { return m_; }
  Complex operator()(int r, int c) const { return m_(r, c); }

  SingleQubitUnitary transpose() const;
  SingleQubitUnitary conjugate() const;
  SingleQubitUnitary adjoint() const;
  SingleQubitUnitary operator*(const SingleQubitUnitary& rhs) const;

  /// Principal square root, eigenvalue branch cut on the negative real axis.
  SingleQubitUnitary principal_sqrt() const;

  bool is_real_orthogonal(double tol = kDefaultTolerance) const;
  bool approx_equal(const SingleQubitUnitary& other, double tol = 1e-12) const;

 private:
  Matrix2 m_;
};

/// Largest entrywise deviation of U^dagger U from the identity.
double unitarity_defect(const Matrix2& m);

}  // namespace pagt
