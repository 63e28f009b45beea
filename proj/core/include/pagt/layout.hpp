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

#include "pagt/state.hpp"

namespace pagt {

/// Pair ground state (1/sqrt 2) sum_xy M_xy |x>_a |y>_b. The gate
/// Hamiltonian H_U(a, b) has link matrix U^T.
struct PairLink {
  int a;
  int b;
  Matrix2 M;
};

PairLink gate_link(int a, int b, const Matrix2& u);

struct TeleportationFlow {
  int input_qubit = 0;
  int output_qubit = 0;
  Matrix2 map = Matrix2::Identity();  // output state = map * input state
  std::vector<int> path;              // qubits visited from input to output
  std::vector<PairLink> final_links;
  std::vector<PairLink> idle_links;   // initial pairs untouched by the final Hamiltonian
  /// |overlap| between the initial and final pairs on closed loops, 1 when
  /// there are none. A vanishing value means the loop has no adiabatic
  /// path to the final ground state.
  double loop_overlap = 1.0;

  /// Final ground state with `phi` on the input, normalized.
  StateVector state(int n_qubits, const ComplexVector& phi) const;
};

/// Follows the input through alternating final and initial pairs until it
/// reaches the qubit left unpaired by the final Hamiltonian.
TeleportationFlow trace_flow(int n_qubits, int input_qubit, const std::vector<PairLink>& initial,
                             const std::vector<PairLink>& final);

/// Initial ground state: `phi` on the input qubit and every initial pair.
StateVector initial_state(int n_qubits, int input_qubit, const ComplexVector& phi,
                          const std::vector<PairLink>& initial);

}  // namespace pagt
