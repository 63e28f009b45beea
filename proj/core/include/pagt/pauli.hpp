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
#include <utility>
#include <vector>

#include "pagt/types.hpp"

namespace pagt {

enum class Pauli : unsigned char { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Matrix2 pauli_matrix(Pauli p);

struct PauliFactor {
  int qubit;
  Pauli op;
  bool operator==(const PauliFactor&) const = default;
};

/// Weighted tensor product of single-qubit Paulis. Qubit 0 is the most
/// significant bit of a basis index.
class PauliString {
 public:
  PauliString(int n_qubits, double coefficient, std::vector<PauliFactor> factors = {});

  static PauliString identity(int n_qubits, double coefficient = 1.0) {
    return PauliString(n_qubits, coefficient);
  }

  int n_qubits() const noexcept { return n_qubits_; }
  double coefficient() const noexcept { return coefficient_; }
  const std::vector<PauliFactor>& factors() const noexcept { return factors_; }
  Index x_mask() const noexcept { return x_mask_; }
  Index z_mask() const noexcept { return z_mask_; }
  int y_count() const noexcept { return y_count_; }
  bool is_identity() const noexcept { return factors_.empty(); }

  Pauli at(int qubit) const;
  PauliString with_coefficient(double c) const;

  /// P|x> = phase * |target>.
  std::pair<Index, Complex> apply_to_basis(Index x) const;

  /// Label such as "X0 Y3"; "I" for the identity.
  std::string label() const;

  bool same_operator(const PauliString& other) const noexcept {
    return x_mask_ == other.x_mask_ && z_mask_ == other.z_mask_;
  }

 private:
  int n_qubits_;
  double coefficient_;
  std::vector<PauliFactor> factors_;
  Index x_mask_ = 0;
  Index z_mask_ = 0;
  int y_count_ = 0;
};

/// Hermitian sum of Pauli strings on a fixed register.
class OperatorSum {
 public:
  static constexpr Index kDenseCap = 4096;

  explicit OperatorSum(int n_qubits);
  OperatorSum(int n_qubits, std::vector<PauliString> terms);

  int n_qubits() const noexcept { return n_qubits_; }
  Index dimension() const noexcept { return Index{1} << n_qubits_; }
  const std::vector<PauliString>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  OperatorSum& add(const PauliString& term);
  OperatorSum& operator+=(const OperatorSum& other);
  OperatorSum& operator-=(const OperatorSum& other);
  OperatorSum& operator*=(double scale);

  /// Merge duplicate strings and drop terms with |c| <= tol.
  OperatorSum canonical(double tol = 1e-14) const;

  /// Coefficient of the string with the given masks, zero when absent.
  double coefficient_of(const PauliString& p) const;

  ComplexMatrix to_dense(Index cap = kDenseCap) const;
  ComplexSparse to_sparse() const;
  std::vector<Eigen::Triplet<Complex>> to_coo() const;

  /// y = H x without materializing H.
  ComplexVector apply(const ComplexVector& x) const;
  void apply_add(const ComplexVector& x, ComplexVector& y, Complex scale) const;
  double expectation(const ComplexVector& x) const;

  /// Largest |coefficient| sum, an upper bound on the spectral norm.
  double coefficient_norm() const;

  /// Pauli decomposition of a Hermitian 2^n x 2^n matrix.
  static OperatorSum from_dense(const ComplexMatrix& m, double tol = 1e-12);

  std::string to_string() const;

 private:
  void check_register(const PauliString& term) const;

  int n_qubits_;
  std::vector<PauliString> terms_;
};

OperatorSum operator+(OperatorSum a, const OperatorSum& b);
OperatorSum operator-(OperatorSum a, const OperatorSum& b);
OperatorSum operator*(double s, OperatorSum a);
OperatorSum operator*(OperatorSum a, double s);

}  // namespace pagt
