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

#include "pagt/pauli.hpp"
#include "pagt/unitary.hpp"

namespace pagt {

/// U_q H U_q^dagger re-expanded into Pauli strings.
OperatorSum conjugate_operator(const OperatorSum& h, const SingleQubitUnitary& u, int q);

/// -omega U_j (I I + X X - Y Y + Z Z) U_j^dagger on qubits (i, j), which is
/// -4 omega U_j |I>><<I| U_j^dagger.
OperatorSum gate_hamiltonian(int n_qubits, const SingleQubitUnitary& u, int i, int j, double omega);

/// |value><value|_control (x) h. Requires h to act trivially on the control.
OperatorSum controlled(const OperatorSum& h, int control, int value);

/// Block of a control-diagonal operator for one control value, with the
/// control qubit removed and later qubits shifted down by one.
OperatorSum control_block(const OperatorSum& h, int control, int value);

/// Coefficient-one product of `op` over the listed qubits.
PauliString pauli_product(int n_qubits, Pauli op, const std::vector<int>& qubits);

}  // namespace pagt
