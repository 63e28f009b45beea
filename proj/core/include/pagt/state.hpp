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

#include <vector>

#include "pagt/types.hpp"
#include "pagt/unitary.hpp"

namespace pagt {

/// Normalized amplitude vector over 2^n basis states, qubit 0 most significant.
class StateVector {
 public:
  StateVector(int n_qubits, ComplexVector amplitudes, double tol = kDefaultTolerance);

  static StateVector basis(int n_qubits, Index index);

  int n_qubits() const noexcept { return n_qubits_; }
  Index dimension() const noexcept { return Index{1} << n_qubits_; }
  const ComplexVector& amplitudes() const noexcept { return amps_; }
  Complex operator[](Index x) const { return amps_[static_cast<Eigen::Index>(x)]; }
  double norm() const { return amps_.norm(); }

 private:
  int n_qubits_;
  ComplexVector amps_;
};

/// Amplitudes on an ordered list of qubits; the first listed qubit is the
/// most significant bit of the local index.
struct StateFragment {
  std::vector<int> qubits;
  ComplexVector amplitudes;
};

/// Tensor product of fragments that cover every qubit exactly once.
StateVector compose(int n_qubits, const std::vector<StateFragment>& fragments);

StateFragment single_qubit(int q, const ComplexVector& amplitudes);

/// (|00> + |11>)/sqrt(2) on (i, j).
StateFragment mes_state(int i, int j);

/// |C>> = (1/sqrt(d)) sum_ab C_ab |a>_i |b>_j with sum |C_ab|^2 = d.
struct BipartiteMatrixState {
  BipartiteMatrixState(const Matrix2& c, int i, int j, double tol = kDefaultTolerance);
  Matrix2 C;
  int i;
  int j;
};

StateFragment matrix_state(const BipartiteMatrixState& c);

/// Raw vector helpers; no normalization requirement.
ComplexVector apply_local_matrix(const ComplexVector& psi, int n_qubits, const Matrix2& m, int q);
ComplexVector apply_cswap(const ComplexVector& psi, int n_qubits, int control, int a, int b);

StateVector apply_local_unitary(const StateVector& psi, const SingleQubitUnitary& u, int q);
StateVector apply_cswap(const StateVector& psi, int control, int a, int b);

Complex inner(const StateVector& a, const StateVector& b);
/// |<a|b>|^2
double fidelity(const StateVector& a, const StateVector& b);
double fidelity(const ComplexVector& a, const ComplexVector& b);

/// Reduced density matrix on `keep` (listed order defines the local basis).
ComplexMatrix reduced_density_matrix(const ComplexVector& psi, int n_qubits, const std::vector<int>& keep);

inline Index qubit_bit(int n_qubits, int q) { return Index{1} << (n_qubits - 1 - q); }

}  // namespace pagt
