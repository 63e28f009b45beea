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

#include "pagt/eigensolver.hpp"
#include "pagt/pauli.hpp"
#include "pagt/sector.hpp"

namespace pagt {

struct HamiltonianPair {
  OperatorSum initial;
  OperatorSum final;
};

/// Identity-gate PAGT pair on 2L+1 qubits: initial bonds (2j-1, 2j) and
/// final bonds (2j-2, 2j-1) for j = 1..L (zero-based qubits).
HamiltonianPair pagt_identity_pair(int L, double omega);

/// Y-conjugation on odd qubits with identity terms dropped. The input must
/// be an identity-gate PAGT pair.
HamiltonianPair to_spin_chain(const HamiltonianPair& pair);

/// omega * sum over bonds of weight * (XX + YY + ZZ); bond (b, b+1) carries
/// 1-s for odd b and s for even b.
OperatorSum spin_chain_hamiltonian(int L, double omega, double s);

struct GridFailure {
  std::size_t index;
  double s;
  double residual;
  std::string message;
};

struct SpectralProfile {
  int L = 0;
  double omega = 0.0;
  int twice_k = 1;
  std::vector<double> s_grid;
  std::vector<double> gaps;
  std::vector<double> ground_energies;
  std::vector<GridFailure> failures;

  bool complete() const noexcept { return failures.empty(); }
};

/// {0, 1/N, ..., 1} with N = 1/step, which must be an integer within 1e-9.
std::vector<double> uniform_grid(double step);

/// Sector-resolved gap Delta E_L(s) of the spin chain, grid points evaluated
/// on up to `threads` workers and aggregated in grid order.
SpectralProfile gap_profile(int L, double omega, const std::vector<double>& s_grid,
                            const EigensolverPolicy& policy = {}, int threads = 1, int twice_k = 1);

struct MinGap {
  double s_star;
  double gap;
  std::size_t index;
};

/// Smallest finite gap; ties resolve toward smaller s.
MinGap min_gap(const SpectralProfile& profile);

/// max |eigenvalue| of a Hermitian operator.
double spectral_norm(const OperatorSum& h, const EigensolverPolicy& policy = {});

/// ||H_fin - H_ini|| of the PAGT pair, evaluated sector by sector.
double pagt_norm_difference(int L, double omega, const EigensolverPolicy& policy = {});

/// Basis index of the bit pattern 0011 0011 ... truncated to 2L+1 qubits.
Index witness_state(int L);
/// <phi0| (H_fin - H_ini) |phi0> for the identity-gate pair.
double norm_witness(int L, double omega);

struct AdiabaticParams {
  double epsilon = 0.01;
  double delta = 1.0;
  double c = 1.0;
};

enum class TimingMode { LinearBound, Adapted };

struct TimingReport {
  int L = 0;
  double omega = 0.0;
  double G_L = 0.0;
  double s_star = 0.0;
  double norm_diff = 0.0;
  double T_e = 0.0;           // trapezoid of 1/gap^2 on the full grid
  double T_e_coarse = 0.0;    // same on every other point, NaN if not halvable
  double T_e_richardson = 0.0;
  double T_L = 0.0;           // norm_diff * T_e
  double linear_bound_T = 0.0;

  double time(TimingMode mode) const { return mode == TimingMode::Adapted ? T_L : linear_bound_T; }
};

/// Throws InvalidArgument when the grid does not cover [0, 1] with spacing
/// at most 0.01 and ZeroGapError on a vanishing gap.
TimingReport sufficient_time(const SpectralProfile& profile, double norm_diff, const AdiabaticParams& params = {});

struct AuditPoint {
  double s;
  double sector_gap;
  double global_gap;     // first level above the doubly degenerate ground
  double ground_split;   // E1 - E0 of the full spectrum
};

/// Dense full-register check (2L+1 <= 11) that the sector gap is the
/// global first excitation.
std::vector<AuditPoint> global_gap_audit(int L, double omega, const std::vector<double>& s_values);

}  // namespace pagt
