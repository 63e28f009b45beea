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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

struct Shared {
  pagt::cli::CommonOptions common;
  std::string L = "1";
  std::string out;
  bool no_header_meta = false;
};

void add_shared(CLI::App* cmd, Shared& s, bool spectral) {
  cmd->add_option("--omega", s.common.omega, "Coupling strength")->capture_default_str();
  cmd->add_option("--threads", s.common.threads, "Worker threads")->capture_default_str();
  cmd->add_option("--seed", s.common.seed, "Seed for random input states")->capture_default_str();
  cmd->add_option("--out", s.out, "Output path (stdout when omitted)");
  cmd->add_flag("--no-header-meta", s.no_header_meta, "Omit the timestamped metadata");
  if (spectral) {
    cmd->add_option("--s-step", s.common.s_step, "Grid step in s")->capture_default_str();
    cmd->add_option("--L", s.L, "Gate count or range a..b")->capture_default_str();
    cmd->add_option("--max-L", s.common.L_cap, "Largest accepted L")->capture_default_str();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulation of parallelized adiabatic gate teleportation"};
  app.require_subcommand(1);
  Shared s;
  pagt::AdiabaticParams params;
  std::string spec_path, figure_name;
  std::size_t stride = 10;

  auto* gap = app.add_subcommand("gap-scan", "Sector gap Delta E_L(s) on the s grid");
  add_shared(gap, s, true);
  auto* timing = app.add_subcommand("timing", "Minimum gap, norms and sufficient times per L");
  add_shared(timing, s, true);
  auto* norm = app.add_subcommand("norm-check", "Spectral norm of H_fin - H_ini against its bounds");
  add_shared(norm, s, true);
  auto* scheme = app.add_subcommand("scheme", "Run one scheme spec and emit its JSON report");
  add_shared(scheme, s, false);
  scheme->add_option("--spec", spec_path, "Scheme spec JSON")->required()->check(CLI::ExistingFile);
  auto* evolve = app.add_subcommand("evolve", "Run one scheme spec and emit the evolution trace");
  add_shared(evolve, s, false);
  evolve->add_option("--spec", spec_path, "Scheme spec JSON")->required()->check(CLI::ExistingFile);
  evolve->add_option("--stride", stride, "Trace every n-th step")->capture_default_str();
  auto* figure = app.add_subcommand("figure", "Data behind the gap and timing figures");
  add_shared(figure, s, true);
  figure->add_option("name", figure_name, "fig5, fig6 or fig7")->required();
  for (auto* cmd : {timing, figure}) {
    cmd->add_option("--epsilon", params.epsilon, "Target error of the linear bound")->capture_default_str();
    cmd->add_option("--delta", params.delta, "Exponent of the linear bound")->capture_default_str();
    cmd->add_option("--c", params.c, "Constant of the linear bound")->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : pagt::cli::kInvalidInput;
  }

  auto& o = s.common;
  o.header_meta = !s.no_header_meta;
  std::ostringstream buffer;
  int code = 0;
  try {
    if (app.got_subcommand(gap) || app.got_subcommand(timing) || app.got_subcommand(norm) ||
        app.got_subcommand(figure))
      pagt::cli::parse_L_range(s.L, o.L_lo, o.L_hi);
  } catch (const std::exception& e) {
    std::cerr << "{\"error\":\"invalid-argument\",\"message\":\"" << e.what() << "\"}\n";
    return pagt::cli::kInvalidInput;
  }
  if (app.got_subcommand(gap)) code = pagt::cli::cmd_gap_scan(o, buffer, std::cerr);
  else if (app.got_subcommand(timing)) code = pagt::cli::cmd_timing(o, params, buffer, std::cerr);
  else if (app.got_subcommand(norm)) code = pagt::cli::cmd_norm_check(o, buffer, std::cerr);
  else if (app.got_subcommand(scheme)) code = pagt::cli::cmd_scheme(spec_path, o, buffer, std::cerr);
  else if (app.got_subcommand(evolve)) code = pagt::cli::cmd_evolve(spec_path, stride, o, buffer, std::cerr);
  else if (app.got_subcommand(figure)) code = pagt::cli::cmd_figure(figure_name, o, params, buffer, std::cerr);

  // single write after aggregation
  if (s.out.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream f(s.out);
    if (!f) {
      std::cerr << "{\"error\":\"io\",\"message\":\"cannot write " << s.out << "\"}\n";
      return pagt::cli::kRuntimeError;
    }
    f << buffer.str();
  }
  return code;
}
