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

#include <cstdint>
#include <iosfwd>
#include <string>

#include "pagt/spectral.hpp"

namespace pagt::cli {

struct CommonOptions {
  double omega = 0.5;
  double s_step = 0.01;
  int L_lo = 1;
  int L_hi = 1;
  int L_cap = 10;
  int threads = 1;
  std::uint64_t seed = 0;
  bool header_meta = true;
};

/// Exit codes shared by every command.
enum ExitCode : int {
  kOk = 0,
  kVerdictFailed = 1,
  kInvalidInput = 2,
  kRuntimeError = 3,
};

/// Parses "a..b" or "a" into an inclusive range.
void parse_L_range(const std::string& text, int& lo, int& hi);

/// %.12g
std::string fmt(double x);

int cmd_gap_scan(const CommonOptions& o, std::ostream& out, std::ostream& err);
int cmd_timing(const CommonOptions& o, const AdiabaticParams& params, std::ostream& out, std::ostream& err);
int cmd_norm_check(const CommonOptions& o, std::ostream& out, std::ostream& err);
int cmd_scheme(const std::string& spec_path, const CommonOptions& o, std::ostream& out, std::ostream& err);
int cmd_evolve(const std::string& spec_path, std::size_t stride, const CommonOptions& o, std::ostream& out,
               std::ostream& err);
/// "fig5" gap curves, "fig6" minimum gap per L, "fig7" timing table.
int cmd_figure(const std::string& name, const CommonOptions& o, const AdiabaticParams& params, std::ostream& out,
               std::ostream& err);

}  // namespace pagt::cli
