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

#include "pagt/scheme_io.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <numbers>
#include <random>
#include <set>

namespace pagt {

using nlohmann::json;
using nlohmann::ordered_json;

SpecValidationError::SpecValidationError(std::vector<ValidationIssue> issues)
    : std::runtime_error([&] {
        std::string s = "invalid scheme spec:";
        for (const auto& i : issues) s += " [" + (i.pointer.empty() ? std::string("/") : i.pointer) + "] " + i.message;
        return s;
      }()),
      issues_(std::move(issues)) {}

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

ComplexVector haar_state(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  ComplexVector v(2);
  v[0] = Complex(g(rng), g(rng));
  v[1] = Complex(g(rng), g(rng));
  return v.normalized();
}

namespace {

Complex parse_complex(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw InvalidArgument("expected a number or an [re, im] pair");
}

}  // namespace

ComplexVector parse_state(const json& j, std::uint64_t default_seed) {
  const double r = 1.0 / std::numbers::sqrt2;
  ComplexVector v(2);
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "0") v << 1, 0;
    else if (s == "1") v << 0, 1;
    else if (s == "+") v << r, r;
    else if (s == "-") v << r, -r;
    else if (s == "+i") v << r, Complex(0, r);
    else if (s == "-i") v << r, Complex(0, -r);
    else if (s == "haar") return haar_state(default_seed);
    else throw InvalidArgument("unknown state name '" + s + "'");
    return v;
  }
  if (j.is_object()) {
    if (j.size() != 1 || !j.contains("haar") || !j["haar"].is_number_unsigned())
      throw InvalidArgument("state object must be {\"haar\": <seed>}");
    return haar_state(j["haar"].get<std::uint64_t>());
  }
  if (j.is_array() && j.size() == 2) {
    v[0] = parse_complex(j[0]);
    v[1] = parse_complex(j[1]);
    if (!v.allFinite() || v.norm() < 1e-12) throw InvalidArgument("state amplitudes must be finite and non-zero");
    if (std::abs(v.norm() - 1.0) > kDefaultTolerance) throw InvalidArgument("state amplitudes are not normalized");
    return v;
  }
  throw InvalidArgument("state must be a name, {\"haar\": seed} or two amplitudes");
}

SingleQubitUnitary parse_unitary(const json& j) {
  if (j.is_string()) return SingleQubitUnitary::named(j.get<std::string>());
  if (!j.is_array()) throw InvalidArgument("unitary must be a name or a 2x2 array");
  Matrix2 m;
  if (j.size() == 2) {
    // nested rows; an entry is a number or an [re, im] pair
    for (std::size_t r = 0; r < 2; ++r) {
      if (!j[r].is_array() || j[r].size() != 2) throw InvalidArgument("nested unitary rows must have two entries");
      for (std::size_t c = 0; c < 2; ++c) m(static_cast<int>(r), static_cast<int>(c)) = parse_complex(j[r][c]);
    }
    return SingleQubitUnitary(m);
  }
  if (j.size() == 4) {
    for (int k = 0; k < 4; ++k) m(k / 2, k % 2) = parse_complex(j[static_cast<std::size_t>(k)]);
    return SingleQubitUnitary(m);
  }
  throw InvalidArgument("unitary array must be 2x2 nested or 4 entries row-major");
}

SchemeSpec parse_scheme_spec(const json& doc, std::uint64_t seed) {
  std::vector<ValidationIssue> issues;
  SchemeSpec spec;
  if (!doc.is_object()) throw SpecValidationError(std::vector<ValidationIssue>{{"", "spec must be a JSON object"}});

  static const std::set<std::string> kKeys = {
      "scheme",   "unitaries", "phi",    "phi0",          "phi1",   "control",   "omega",
      "schedule", "T",         "auto_time_factor", "pairing", "term_lags", "thresholds",
      "step_control", "max_L", "seed"};
  for (const auto& [k, v] : doc.items())
    if (!kKeys.count(k)) issues.push_back({"/" + k, "unknown field"});

  auto guard = [&](const std::string& ptr, auto&& fn) {
    try {
      fn();
    } catch (const InvalidArgument& e) {
      issues.push_back({ptr, e.what()});
    } catch (const json::exception& e) {
      issues.push_back({ptr, e.what()});
    }
  };
  auto number = [](const json& j, const char* what) {
    if (!j.is_number()) throw InvalidArgument(std::string(what) + " must be a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw InvalidArgument(std::string(what) + " must be finite");
    return v;
  };

  if (doc.contains("seed"))
    guard("/seed", [&] {
      if (!doc["seed"].is_number_unsigned()) throw InvalidArgument("seed must be a non-negative integer");
      seed = doc["seed"].get<std::uint64_t>();
    });
  if (!doc.contains("scheme")) {
    issues.push_back({"/scheme", "missing required field"});
  } else {
    guard("/scheme", [&] {
      if (!doc["scheme"].is_string()) throw InvalidArgument("scheme must be a string");
      spec.scheme = parse_scheme_id(doc["scheme"].get<std::string>());
    });
  }
  if (doc.contains("unitaries")) {
    const json& us = doc["unitaries"];
    if (!us.is_array()) {
      issues.push_back({"/unitaries", "must be an array"});
    } else {
      for (std::size_t k = 0; k < us.size(); ++k)
        guard("/unitaries/" + std::to_string(k), [&] { spec.unitaries.push_back(parse_unitary(us[k])); });
    }
  }
  std::uint64_t state_seed = seed;
  auto state_field = [&](const char* key, auto&& assign) {
    if (doc.contains(key)) guard(std::string("/") + key, [&] { assign(parse_state(doc[key], state_seed++)); });
  };
  state_field("phi", [&](ComplexVector v) { spec.phi = v; });
  state_field("phi0", [&](ComplexVector v) { spec.phi0 = v; });
  state_field("phi1", [&](ComplexVector v) { spec.phi1 = v; });
  state_field("control", [&](ComplexVector v) { spec.control = v; });
  if (doc.contains("omega"))
    guard("/omega", [&] {
      spec.omega = number(doc["omega"], "omega");
      if (!(spec.omega > 0.0)) throw InvalidArgument("omega must be positive");
    });
  if (doc.contains("schedule")) {
    const json& s = doc["schedule"];
    guard("/schedule", [&] {
      if (s.is_string()) {
        const std::string k = s.get<std::string>();
        if (k == "linear") spec.schedule = ScheduleKind::Linear;
        else if (k == "gap-adapted") spec.schedule = ScheduleKind::GapAdapted;
        else throw InvalidArgument("schedule must be \"linear\", \"gap-adapted\" or a table");
      } else if (s.is_object()) {
        if (s.value("kind", std::string()) != "tabulated" || !s.contains("t") || !s.contains("s"))
          throw InvalidArgument("table schedule needs kind \"tabulated\", t and s");
        TabulatedSchedule tab{s["t"].get<std::vector<double>>(), s["s"].get<std::vector<double>>()};
        Schedule::tabulated(tab.t, tab.s);  // validates monotonicity and endpoints
        spec.schedule = ScheduleKind::Tabulated;
        spec.table = std::move(tab);
      } else {
        throw InvalidArgument("schedule must be a string or a table object");
      }
    });
  }
  if (doc.contains("T"))
    guard("/T", [&] {
      const json& t = doc["T"];
      if (t.is_string() && t.get<std::string>() == "auto") return;
      const double v = number(t, "T");
      if (v < 0.0) throw InvalidArgument("T must be non-negative");
      spec.T = v;
    });
  if (doc.contains("auto_time_factor"))
    guard("/auto_time_factor", [&] {
      spec.auto_time_factor = number(doc["auto_time_factor"], "auto_time_factor");
      if (!(spec.auto_time_factor > 0.0)) throw InvalidArgument("auto_time_factor must be positive");
    });
  if (doc.contains("pairing"))
    guard("/pairing", [&] {
      std::vector<std::pair<int, int>> pairs;
      for (const auto& p : doc["pairing"]) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
          throw InvalidArgument("pairing entries must be [a, b] integer pairs");
        pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
      }
      spec.pairing = std::move(pairs);
    });
  if (doc.contains("term_lags")) {
    const json& lags = doc["term_lags"];
    if (!lags.is_object()) {
      issues.push_back({"/term_lags", "must be an object"});
    } else {
      for (const auto& [k, v] : lags.items())
        guard("/term_lags/" + k, [&, key = k, val = v] { spec.term_lags[key] = number(val, "lag"); });
    }
  }
  if (doc.contains("thresholds")) {
    const json& th = doc["thresholds"];
    if (!th.is_object()) {
      issues.push_back({"/thresholds", "must be an object"});
    } else {
      for (const auto& [k, v] : th.items()) {
        guard("/thresholds/" + k, [&, key = k, val = v] {
          const double x = number(val, key.c_str());
          if (!(x >= 0.0)) throw InvalidArgument("threshold must be non-negative");
          if (key == "fidelity") spec.thresholds.fidelity = x;
          else if (key == "phase") spec.thresholds.phase = x;
          else if (key == "purity_margin") spec.thresholds.purity_margin = x;
          else if (key == "crossing_gap") spec.thresholds.crossing_gap = x;
          else throw InvalidArgument("unknown threshold");
        });
      }
    }
  }
  if (doc.contains("step_control")) {
    const json& sc = doc["step_control"];
    if (!sc.is_object()) {
      issues.push_back({"/step_control", "must be an object"});
    } else {
      for (const auto& [k, v] : sc.items()) {
        guard("/step_control/" + k, [&, key = k, val = v] {
          const double x = number(val, key.c_str());
          if (!(x > 0.0)) throw InvalidArgument("step control values must be positive");
          if (key == "dt_max") spec.step_control.dt_max = x;
          else if (key == "tol") spec.step_control.tol = x;
          else if (key == "dt_min") spec.step_control.dt_min = x;
          else throw InvalidArgument("unknown step control field");
        });
      }
    }
  }
  if (doc.contains("max_L"))
    guard("/max_L", [&] {
      if (!doc["max_L"].is_number_integer() || doc["max_L"].get<int>() < 1)
        throw InvalidArgument("max_L must be a positive integer");
      spec.max_L = doc["max_L"].get<int>();
    });

  if (issues.empty()) guard("", [&] { build_scheme(spec); });
  if (!issues.empty()) throw SpecValidationError(std::move(issues));
  return spec;
}

namespace {

ordered_json complex_json(Complex z) { return ordered_json::array({round12(z.real()), round12(z.imag())}); }

ordered_json vector_json(const ComplexVector& v) {
  ordered_json a = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(complex_json(v[i]));
  return a;
}

ordered_json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round12(x);
}

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

ordered_json report_to_json(const SchemeReport& r, bool include_meta) {
  ordered_json j;
  j["scheme"] = to_string(r.scheme);
  j["verdict"] = r.verdict;
  j["exit_code"] = r.exit_code;
  j["reason"] = r.reason;

  ordered_json p;
  p["omega"] = num(r.omega);
  p["T"] = num(r.T);
  if (r.auto_time) {
    p["T_source"] = "auto";
    p["auto_time"] = {{"L_eff", r.auto_time->L_eff}, {"T_L", num(r.auto_time->T_L)}, {"factor", num(r.auto_time->factor)}};
  } else {
    p["T_source"] = r.schedule == ScheduleKind::Tabulated ? "table" : "explicit";
  }
  p["schedule"] = to_string(r.schedule);
  ordered_json lags = ordered_json::object();
  for (const auto& [k, v] : r.term_lags) lags[k] = num(v);
  p["term_lags"] = lags;
  p["coherent_schedules"] = r.coherent;
  p["n_qubits"] = r.n_qubits;
  p["output_qubit"] = r.output_label;
  j["parameters"] = p;

  j["thresholds"] = {{"fidelity", num(r.thresholds.fidelity)},
                     {"phase", num(r.thresholds.phase)},
                     {"purity_margin", num(r.thresholds.purity_margin)},
                     {"crossing_gap", num(r.thresholds.crossing_gap)}};

  ordered_json m;
  m["fidelity"] = num(r.evolution.fidelity);
  m["leakage"] = num(r.evolution.leakage);
  m["norm_drift"] = num(r.evolution.norm_drift);
  if (r.branch) {
    m["branch"] = {{"defined", r.branch->defined},
                   {"phase", num(r.branch->phase)},
                   {"w0", num(r.branch->w0)},
                   {"w1", num(r.branch->w1)},
                   {"residual", num(r.branch->residual)}};
  } else {
    m["branch"] = nullptr;
  }
  m["purity"] = r.purity ? num(*r.purity) : ordered_json(nullptr);
  if (r.crossing)
    m["crossing"] = {{"detected", r.crossing->detected}, {"s", num(r.crossing->s)}, {"min_gap", num(r.crossing->min_gap)}};
  else
    m["crossing"] = nullptr;
  ordered_json loops = ordered_json::array();
  for (double x : r.loop_overlaps) loops.push_back(num(x));
  m["loop_overlaps"] = loops;
  j["metrics"] = m;

  ordered_json outs = ordered_json::array();
  for (const auto& v : r.expected_output) outs.push_back(vector_json(v));
  j["expected_output"] = outs;
  j["post_processing"] = r.post_processing;
  j["evolution"] = {{"steps", r.evolution.steps},
                    {"refinements", r.evolution.refinements},
                    {"dt", num(r.evolution.dt)},
                    {"last_change", num(r.evolution.last_change)}};
  if (include_meta) {
    j["meta"] = {{"generator", "pagt 0.1.0"}, {"timestamp", utc_now()}, {"wall_time_s", r.evolution.wall_time}};
  }
  return j;
}

ordered_json issues_to_json(const std::vector<ValidationIssue>& issues) {
  ordered_json a = ordered_json::array();
  for (const auto& i : issues) a.push_back({{"pointer", i.pointer}, {"message", i.message}});
  return a;
}

}  // namespace pagt
