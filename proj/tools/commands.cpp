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

#include "commands.hpp"

#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pagt/errors.hpp"
#include "pagt/scheme_io.hpp"
#include "pagt/schemes.hpp"

namespace pagt::cli {

using nlohmann::ordered_json;

namespace {

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void meta_line(const CommonOptions& o, const std::string& command, std::ostream& out) {
  if (o.header_meta) out << "# pagt 0.1.0 " << command << " generated " << utc_now() << '\n';
}

void check_common(const CommonOptions& o) {
  if (!(o.omega > 0.0)) throw InvalidArgument("--omega must be positive");
  if (o.L_lo < 1 || o.L_hi < o.L_lo) throw InvalidArgument("--L range is empty");
  if (o.L_hi > o.L_cap) throw InvalidArgument("--L upper end exceeds the cap of " + std::to_string(o.L_cap));
  if (o.threads < 1) throw InvalidArgument("--threads must be at least 1");
  uniform_grid(o.s_step);
}

void error_record(std::ostream& err, const ordered_json& j) { err << j.dump() << '\n'; }

int report_failures(const SpectralProfile& p, std::ostream& err) {
  for (const auto& f : p.failures) {
    ordered_json j;
    j["error"] = "convergence";
    j["L"] = p.L;
    j["s"] = f.s;
    j["residual"] = f.residual;
    j["message"] = f.message;
    error_record(err, j);
  }
  return p.failures.empty() ? kOk : kRuntimeError;
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const SpecValidationError& e) {
    error_record(err, {{"error", "validation"}, {"issues", issues_to_json(e.issues())}});
    return kInvalidInput;
  } catch (const InvalidArgument& e) {
    error_record(err, {{"error", "invalid-argument"}, {"message", e.what()}});
    return kInvalidInput;
  } catch (const ZeroGapError& e) {
    error_record(err, {{"error", "zero-gap"}, {"s", e.s()}, {"message", e.what()}});
    return kRuntimeError;
  } catch (const ConvergenceError& e) {
    error_record(err, {{"error", "convergence"}, {"residual", e.residual()}, {"message", e.what()}});
    return kRuntimeError;
  } catch (const std::exception& e) {
    error_record(err, {{"error", "runtime"}, {"message", e.what()}});
    return kRuntimeError;
  }
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open spec file '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecValidationError(std::vector<ValidationIssue>{{"", std::string("malformed JSON: ") + e.what()}});
  }
}

}  // namespace

void parse_L_range(const std::string& text, int& lo, int& hi) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("cannot parse L range '" + text + "'");
    }
    if (used != s.size()) throw InvalidArgument("cannot parse L range '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    lo = hi = to_int(text);
  } else {
    lo = to_int(text.substr(0, dots));
    hi = to_int(text.substr(dots + 2));
  }
  if (lo < 1 || hi < lo) throw InvalidArgument("L range '" + text + "' is empty");
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

int cmd_gap_scan(const CommonOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_common(o);
    const auto grid = uniform_grid(o.s_step);
    std::ostringstream body;
    int code = kOk;
    for (int L = o.L_lo; L <= o.L_hi; ++L) {
      const SpectralProfile p = gap_profile(L, o.omega, grid, {}, o.threads);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        if (std::isnan(p.gaps[i])) continue;
        body << L << ',' << fmt(o.omega) << ',' << fmt(grid[i]) << ',' << fmt(p.gaps[i]) << ','
             << fmt(p.ground_energies[i]) << '\n';
      }
      code = std::max(code, report_failures(p, err));
    }
    meta_line(o, "gap-scan", out);
    out << "L,omega,s,gap,ground_energy\n" << body.str();
    return code;
  });
}

int cmd_timing(const CommonOptions& o, const AdiabaticParams& params, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_common(o);
    const auto grid = uniform_grid(o.s_step);
    std::ostringstream body;
    int code = kOk;
    for (int L = o.L_lo; L <= o.L_hi; ++L) {
      const SpectralProfile p = gap_profile(L, o.omega, grid, {}, o.threads);
      if (!p.complete()) {
        code = std::max(code, report_failures(p, err));
        continue;
      }
      const TimingReport t = sufficient_time(p, pagt_norm_difference(L, o.omega), params);
      body << L << ',' << fmt(t.G_L) << ',' << fmt(t.s_star) << ',' << fmt(t.norm_diff) << ',' << fmt(t.T_e) << ','
           << fmt(t.T_L) << ',' << fmt(t.linear_bound_T) << '\n';
    }
    meta_line(o, "timing", out);
    out << "L,G_L,s_star,norm_diff,T_e,T_L,linear_bound_T\n" << body.str();
    return code;
  });
}

int cmd_norm_check(const CommonOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_common(o);
    std::ostringstream body;
    for (int L = o.L_lo; L <= o.L_hi; ++L) {
      const double n = pagt_norm_difference(L, o.omega);
      body << L << ',' << fmt(n) << ',' << fmt(o.omega * L) << ',' << fmt(6.0 * o.omega * L) << ','
           << fmt(norm_witness(L, o.omega)) << '\n';
    }
    meta_line(o, "norm-check", out);
    out << "L,norm,lower,upper,witness_value\n" << body.str();
    return kOk;
  });
}

int cmd_scheme(const std::string& spec_path, const CommonOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SchemeSpec spec = parse_scheme_spec(load_json(spec_path), o.seed);
    const SchemeReport r = run_scheme(spec, {o.threads, 0});
    out << report_to_json(r, o.header_meta).dump(2) << '\n';
    return r.exit_code;
  });
}

int cmd_evolve(const std::string& spec_path, std::size_t stride, const CommonOptions& o, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    if (stride == 0) throw InvalidArgument("--stride must be at least 1");
    const SchemeSpec spec = parse_scheme_spec(load_json(spec_path), o.seed);
    const SchemeReport r = run_scheme(spec, {o.threads, stride});
    meta_line(o, "evolve " + to_string(spec.scheme), out);
    out << "t,s,fidelity_to_target,leakage,norm\n";
    for (const auto& row : r.evolution.trace)
      out << fmt(row.t) << ',' << fmt(row.s) << ',' << fmt(row.fidelity_to_target) << ',' << fmt(row.leakage) << ','
          << fmt(row.norm) << '\n';
    return kOk;
  });
}

int cmd_figure(const std::string& name, const CommonOptions& o, const AdiabaticParams& params, std::ostream& out,
               std::ostream& err) {
  if (name == "fig5") return cmd_gap_scan(o, out, err);
  if (name == "fig7") return cmd_timing(o, params, out, err);
  if (name == "fig6") {
    return guarded(err, [&] {
      check_common(o);
      const auto grid = uniform_grid(o.s_step);
      std::ostringstream body;
      int code = kOk;
      for (int L = o.L_lo; L <= o.L_hi; ++L) {
        const SpectralProfile p = gap_profile(L, o.omega, grid, {}, o.threads);
        code = std::max(code, report_failures(p, err));
        const MinGap m = min_gap(p);
        body << L << ',' << fmt(m.gap) << ',' << fmt(m.s_star) << '\n';
      }
      meta_line(o, "figure fig6", out);
      out << "L,G_L,s_star\n" << body.str();
      return code;
    });
  }
  error_record(err, {{"error", "invalid-argument"}, {"message", "unknown figure '" + name + "'"}});
  return kInvalidInput;
}

}  // namespace pagt::cli
