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

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pagt/evolution.hpp"
#include "pagt/layout.hpp"
#include "pagt/schedule.hpp"
#include "pagt/unitary.hpp"

namespace pagt {

enum class SchemeId {
  AT,
  AGT,
  TRANS,
  CONJ,
  DAGGER,
  PAGT,
  PAGT_REORDERED,
  QSWITCH,
  CTRL_U_NAIVE,
  CTRL_U_REVISED,
  CTRL_ORTHO,
  CTRL_UT_UDAG,
};

std::string to_string(SchemeId id);
SchemeId parse_scheme_id(const std::string& name);
bool is_controlled(SchemeId id);

struct Thresholds {
  double fidelity = 0.99;
  double phase = 0.01;          // radians
  double purity_margin = 0.05;
  double crossing_gap = 1e-6;
};

struct TabulatedSchedule {
  std::vector<double> t;
  std::vector<double> s;
};

struct SchemeSpec {
  SchemeId scheme = SchemeId::AT;
  std::vector<SingleQubitUnitary> unitaries;
  ComplexVector phi = ComplexVector::Unit(2, 0);
  std::optional<ComplexVector> phi0;  // controlled schemes, default phi
  std::optional<ComplexVector> phi1;
  ComplexVector control = ComplexVector::Constant(2, Complex(1.0 / 1.4142135623730951));
  double omega = 0.5;
  ScheduleKind schedule = ScheduleKind::GapAdapted;
  std::optional<TabulatedSchedule> table;
  std::optional<double> T;            // nullopt selects the automatic time
  double auto_time_factor = 10.0;
  std::optional<std::vector<std::pair<int, int>>> pairing;  // one-based labels
  std::map<std::string, double> term_lags;                  // fraction of T
  Thresholds thresholds{};
  StepControl step_control{};
  int max_L = 10;
};

/// One named Hamiltonian piece with its schedule role.
struct SchemePiece {
  std::string name;
  OperatorSum op;
  bool initial;  // weight 1 - s for initial pieces, s for final ones
};

struct CSwap {
  int control;
  int a;
  int b;
};

/// Everything needed to run and check one scheme, before any evolution.
struct SchemeSetup {
  SchemeId scheme;
  int n_qubits = 0;
  std::optional<int> control;
  std::vector<SchemePiece> pieces;
  ComplexVector psi0;
  ComplexVector target_pre;   // before post-processing
  ComplexVector target;       // after post-processing
  std::vector<CSwap> cswaps;
  int output_qubit = 0;
  int L_eff = 1;
  std::vector<ComplexVector> expected_output;  // per branch, on the output qubit
  std::optional<ComplexVector> branch_target0;  // normalized, control removed
  std::optional<ComplexVector> branch_target1;
  std::vector<double> loop_overlaps;
  std::vector<int> purity_keep;

  OperatorSum h_ini() const;
  OperatorSum h_fin() const;
  std::string label(int qubit) const;
};

SchemeSetup build_scheme(const SchemeSpec& spec);

/// The scheme with every unitary replaced by the identity.
SchemeSpec identity_variant(const SchemeSpec& spec);

struct Crossing {
  bool detected = false;
  double s = NAN;
  double min_gap = NAN;
};

struct AutoTime {
  int L_eff = 1;
  double T_L = NAN;
  double factor = NAN;
};

struct SchemeReport {
  SchemeId scheme;
  std::string verdict;
  int exit_code = 1;
  std::string reason;
  double omega = 0.0;
  double T = 0.0;
  std::optional<AutoTime> auto_time;
  ScheduleKind schedule = ScheduleKind::GapAdapted;
  std::map<std::string, double> term_lags;
  bool coherent = true;
  int n_qubits = 0;
  std::string output_label;
  Thresholds thresholds{};
  EvolutionReport evolution;
  ComplexVector output_state;  // after post-processing
  ComplexVector target;
  std::vector<std::string> post_processing;
  std::vector<ComplexVector> expected_output;
  std::optional<BranchDecomposition> branch;
  std::optional<double> purity;
  std::optional<Crossing> crossing;
  std::vector<double> loop_overlaps;
};

struct RunOptions {
  int threads = 1;
  std::size_t trace_stride = 0;
};

SchemeReport run_scheme(const SchemeSpec& spec, const RunOptions& options = {});

SchemeReport run_at(const SchemeSpec& spec);
SchemeReport run_variant(const SchemeSpec& spec);
SchemeReport run_pagt(const SchemeSpec& spec);
SchemeReport run_pagt_reordered(const SchemeSpec& spec);
SchemeReport run_quantum_switch(const SchemeSpec& spec);
SchemeReport run_ctrl_u_naive(const SchemeSpec& spec);
SchemeReport run_ctrl_u_revised(const SchemeSpec& spec);
SchemeReport run_ctrl_ortho(const SchemeSpec& spec);
SchemeReport run_ctrl_ut_udag(const SchemeSpec& spec);

/// Gap scan of (1 - s) H_U + s H_I on two qubits.
Crossing two_qubit_crossing(const SingleQubitUnitary& u, double omega, const std::vector<double>& s_grid,
                            double threshold);

/// Evolution time used when the spec asks for "auto".
AutoTime automatic_time(int L_eff, double omega, double factor, int threads = 1);

}  // namespace pagt
