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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pagt/pauli.hpp"
#include "pagt/schedule.hpp"
#include "pagt/state.hpp"

namespace pagt {

struct StepControl {
  double dt_max = 0.1;
  double tol = 1e-6;     // l2 change between successive halvings
  double dt_min = 1e-5;
};

struct PropagatorPolicy {
  Index dense_max_dim = 256;  // exact exponential by eigendecomposition
  int krylov_dim = 30;
  double krylov_tol = 1e-12;
  Index leakage_max_dim = 1024;  // ground-space leakage is NaN above this
};

struct ScheduledTerm {
  OperatorSum op;
  std::function<double(double)> weight;  // coefficient as a function of t
};

struct TraceRow {
  double t;
  double s;
  double fidelity_to_target;
  double leakage;
  double norm;
};

struct EvolveOptions {
  StepControl control{};
  PropagatorPolicy propagator{};
  std::optional<ComplexVector> target;
  std::function<double(double)> s_of_t;  // for trace output only
  std::size_t trace_stride = 0;          // 0 disables the trace
};

struct EvolutionReport {
  ComplexVector final_state;
  double fidelity = NAN;   // |<target|psi(T)>|^2, NaN without a target
  double leakage = NAN;    // 1 - ||P_ground psi(T)||^2 for H(T)
  double norm_drift = 0.0;
  double total_time = 0.0;
  std::size_t steps = 0;
  int refinements = 0;
  double dt = 0.0;
  double last_change = 0.0;
  double wall_time = 0.0;
  std::vector<TraceRow> trace;
};

/// H(t) = sum_k weight_k(t) op_k, propagated by midpoint exponentials with
/// step halving until two successive runs agree within control.tol.
EvolutionReport evolve_multiterm(const std::vector<ScheduledTerm>& terms, const ComplexVector& psi0, double T,
                                 const EvolveOptions& options = {});

/// H(s) = (1 - s) H_ini + s H_fin under `schedule`.
EvolutionReport evolve(const OperatorSum& h_ini, const OperatorSum& h_fin, const Schedule& schedule,
                       const ComplexVector& psi0, const EvolveOptions& options = {});

/// One fixed-step pass with `steps` midpoint exponentials.
ComplexVector propagate_fixed(const std::vector<ScheduledTerm>& terms, const ComplexVector& psi0, double T,
                              std::size_t steps, const PropagatorPolicy& policy = {});

/// exp(-i dt H) psi for a Hermitian operator.
ComplexVector apply_exponential(const OperatorSum& h, const ComplexVector& psi, double dt,
                                const PropagatorPolicy& policy = {});

/// 1 - weight of psi on the ground space of h (levels within `degeneracy`).
double ground_leakage(const OperatorSum& h, const ComplexVector& psi, double degeneracy = 1e-6);

struct BranchDecomposition {
  double phase = NAN;  // arg(b / a)
  double w0 = 0.0;     // |a|^2
  double w1 = 0.0;     // |b|^2
  double residual = 0.0;
  bool defined = false;
};

/// psi = |0>_c a t0 + |1>_c b t1 + residual, targets on the other qubits.
BranchDecomposition branch_phase(const ComplexVector& psi, int n_qubits, int control, const ComplexVector& target0,
                                 const ComplexVector& target1);

ComplexVector extract_branch(const ComplexVector& psi, int n_qubits, int control, int value);
ComplexVector join_branches(const ComplexVector& b0, const ComplexVector& b1, int n_qubits, int control);

/// tr(rho^2) of the reduced state on `keep`.
double reduced_purity(const ComplexVector& psi, int n_qubits, const std::vector<int>& keep);

}  // namespace pagt
