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

#include <map>
#include <string>
#include <vector>

#include "pagt/spectral.hpp"

namespace pagt {

enum class ScheduleKind { Linear, GapAdapted, Tabulated };

std::string to_string(ScheduleKind kind);

/// Monotone map s(t) from [0, T] onto [0, 1].
class Schedule {
 public:
  static Schedule linear(double T);
  /// ds/dt proportional to gap(s)^2, integrated by the trapezoid rule on the
  /// profile grid and inverted by linear interpolation.
  static Schedule gap_adapted(const SpectralProfile& profile, double T);
  static Schedule tabulated(std::vector<double> t, std::vector<double> s);

  /// Holds s at 0 until t = lag, then runs the base schedule compressed into
  /// the remaining window.
  Schedule delayed(double lag) const;

  double operator()(double t) const;
  double total_time() const noexcept { return T_; }
  double lag() const noexcept { return lag_; }
  ScheduleKind kind() const noexcept { return kind_; }

 private:
  Schedule(ScheduleKind kind, double T, std::vector<double> u, std::vector<double> s);

  ScheduleKind kind_;
  double T_;
  double lag_ = 0.0;
  std::vector<double> u_;  // normalized time knots in [0, 1]
  std::vector<double> s_;
};

/// Independent schedules for the six terms of the controlled final
/// Hamiltonian family: F, G, 12, 34, 14, 25.
struct TermSchedule {
  static const std::vector<std::string>& names();
  static TermSchedule synchronized(const Schedule& s);

  const Schedule& at(const std::string& name) const;
  void set(const std::string& name, const Schedule& s);
  /// s_F = s_G, s_12 = s_14 and s_34 = s_25 within tol on a sample grid.
  bool satisfies_coherence(double tol = 1e-12) const;

  std::map<std::string, Schedule> components;
};

}  // namespace pagt
