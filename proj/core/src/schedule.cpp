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

#include "pagt/schedule.hpp"

#include <algorithm>
#include <cmath>

#include "pagt/errors.hpp"

namespace pagt {

std::string to_string(ScheduleKind kind) {
  switch (kind) {
    case ScheduleKind::Linear: return "linear";
    case ScheduleKind::GapAdapted: return "gap-adapted";
    case ScheduleKind::Tabulated: return "tabulated";
  }
  return "unknown";
}

namespace {

void check_time(double T) {
  if (!(T >= 0.0) || !std::isfinite(T)) throw InvalidArgument("total time must be finite and non-negative");
}

double interpolate(const std::vector<double>& x, const std::vector<double>& y, double v) {
  if (v <= x.front()) return y.front();
  if (v >= x.back()) return y.back();
  const auto it = std::upper_bound(x.begin(), x.end(), v);
  const std::size_t i = static_cast<std::size_t>(it - x.begin());
  const double span = x[i] - x[i - 1];
  if (span <= 0.0) return y[i];
  return y[i - 1] + (y[i] - y[i - 1]) * (v - x[i - 1]) / span;
}

}  // namespace

Schedule::Schedule(ScheduleKind kind, double T, std::vector<double> u, std::vector<double> s)
    : kind_(kind), T_(T), u_(std::move(u)), s_(std::move(s)) {}

Schedule Schedule::linear(double T) {
  check_time(T);
  return Schedule(ScheduleKind::Linear, T, {0.0, 1.0}, {0.0, 1.0});
}

Schedule Schedule::gap_adapted(const SpectralProfile& profile, double T) {
  check_time(T);
  const auto& s = profile.s_grid;
  if (s.size() < 2 || std::abs(s.front()) > 1e-12 || std::abs(s.back() - 1.0) > 1e-12)
    throw InvalidArgument("gap-adapted schedule needs a profile covering [0, 1]");
  if (!profile.complete()) throw InvalidArgument("gap-adapted schedule needs a complete profile");
  std::vector<double> c(s.size(), 0.0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!(profile.gaps[i] > 1e-12)) throw ZeroGapError("gap-adapted schedule met a zero gap", s[i]);
    if (i > 0) {
      const double f0 = 1.0 / (profile.gaps[i - 1] * profile.gaps[i - 1]);
      const double f1 = 1.0 / (profile.gaps[i] * profile.gaps[i]);
      c[i] = c[i - 1] + 0.5 * (f0 + f1) * (s[i] - s[i - 1]);
    }
  }
  for (double& v : c) v /= c.back();
  c.back() = 1.0;
  std::vector<double> sv(s.begin(), s.end());
  sv.front() = 0.0;
  sv.back() = 1.0;
  return Schedule(ScheduleKind::GapAdapted, T, std::move(c), std::move(sv));
}

Schedule Schedule::tabulated(std::vector<double> t, std::vector<double> s) {
  if (t.size() < 2 || t.size() != s.size()) throw InvalidArgument("tabulated schedule needs matching t and s tables");
  const double T = t.back();
  check_time(T);
  if (std::abs(t.front()) > 1e-12) throw InvalidArgument("tabulated schedule must start at t = 0");
  if (std::abs(s.front()) > 1e-12 || std::abs(s.back() - 1.0) > 1e-12)
    throw InvalidArgument("tabulated schedule must run from s = 0 to s = 1");
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (!(t[i] > t[i - 1])) throw InvalidArgument("tabulated times must increase");
    if (s[i] < s[i - 1]) throw InvalidArgument("tabulated s must be non-decreasing");
  }
  std::vector<double> u(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) u[i] = T > 0 ? t[i] / T : 0.0;
  s.front() = 0.0;
  s.back() = 1.0;
  return Schedule(ScheduleKind::Tabulated, T, std::move(u), std::move(s));
}

Schedule Schedule::delayed(double lag) const {
  if (!(lag >= 0.0) || lag >= T_) throw InvalidArgument("lag must lie in [0, T)");
  Schedule out = *this;
  out.lag_ = lag;
  return out;
}

double Schedule::operator()(double t) const {
  if (T_ <= 0.0) return t >= 0.0 ? 1.0 : 0.0;
  const double window = T_ - lag_;
  const double u = std::clamp((t - lag_) / window, 0.0, 1.0);
  return interpolate(u_, s_, u);
}

const std::vector<std::string>& TermSchedule::names() {
  static const std::vector<std::string> kNames = {"F", "G", "12", "34", "14", "25"};
  return kNames;
}

TermSchedule TermSchedule::synchronized(const Schedule& s) {
  TermSchedule ts;
  for (const auto& n : names()) ts.components.emplace(n, s);
  return ts;
}

const Schedule& TermSchedule::at(const std::string& name) const {
  auto it = components.find(name);
  if (it == components.end()) throw InvalidArgument("unknown schedule component '" + name + "'");
  return it->second;
}

void TermSchedule::set(const std::string& name, const Schedule& s) {
  if (std::find(names().begin(), names().end(), name) == names().end())
    throw InvalidArgument("unknown schedule component '" + name + "'");
  components.insert_or_assign(name, s);
}

bool TermSchedule::satisfies_coherence(double tol) const {
  const std::pair<const char*, const char*> pairs[] = {{"F", "G"}, {"12", "14"}, {"34", "25"}};
  for (const auto& [a, b] : pairs) {
    const Schedule& x = at(a);
    const Schedule& y = at(b);
    const double T = std::max(x.total_time(), y.total_time());
    for (int k = 0; k <= 200; ++k) {
      const double t = T * k / 200.0;
      if (std::abs(x(t) - y(t)) > tol) return false;
    }
  }
  return true;
}

}  // namespace pagt
