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

namespace pagt {

/// Computational basis states of n qubits sharing 2*Jz = sum_i (-1)^{bit_i}.
struct SectorBasis {
  int n_qubits = 0;
  int twice_k = 0;
  std::vector<Index> states;  // sorted ascending

  Index dimension() const noexcept { return states.size(); }
  /// Position of `state` in the basis, or dimension() when absent.
  Index position(Index state) const;
};

/// All n+1 sectors ordered by increasing twice_k.
std::vector<SectorBasis> sector_decompose(int n_qubits);
SectorBasis sector_basis(int n_qubits, int twice_k);

/// Real block of h on the sector. Throws when h couples the sector to its
/// complement or produces non-real matrix elements.
RealSparse restrict_to_sector(const OperatorSum& h, const SectorBasis& sector, double tol = 1e-12);

/// Frobenius norm of the block of h mapping the sector into its complement.
double sector_leakage_norm(const OperatorSum& h, const SectorBasis& sector);

}  // namespace pagt
