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

#include <catch_amalgamated.hpp>

#include "pagt/errors.hpp"
#include "pagt/schedule.hpp"
#include "pagt/spectral.hpp"

using namespace pagt;
using Catch::Matchers::WithinAbs;

namespace {

SpectralProfile synthetic(double (*gap)(double)) {
  SpectralProfile p;
  p.s_grid = uniform_grid(0.01);
  for (double s : p.s_grid) p.gaps.push_back(gap(s));
  return p;
}

}  // namespace

TEST_CASE("linear schedule") {
  const auto s = Schedule::linear(8.0);
  CHECK(s(0.0) == 0.0);
  CHECK(s(2.0) == 0.25);
  CHECK(s(8.0) == 1.0);
  CHECK(s(9.0) == 1.0);
  CHECK(s.kind() == ScheduleKind::Linear);
  CHECK_THROWS_AS(Schedule::linear(-1.0), InvalidArgument);
}

TEST_CASE("gap-adapted schedule with a flat gap is linear") {
  const auto s = Schedule::gap_adapted(synthetic([](double) { return 0.7; }), 10.0);
  for (double t = 0; t <= 10.0; t += 0.37) CHECK_THAT(s(t), WithinAbs(t / 10.0, 1e-12));
}

TEST_CASE("gap-adapted schedule slows down where the gap closes") {
  const auto p = gap_profile(1, 0.5, uniform_grid(0.01));
  const double T = 20.0;
  const auto s = Schedule::gap_adapted(p, T);
  CHECK(s(0.0) == 0.0);
  CHECK(s(T) == 1.0);
  double prev = 0.0;
  for (int k = 1; k <= 400; ++k) {
    const double v = s(T * k / 400.0);
    CHECK(v >= prev);
    prev = v;
  }
  // ds/dt is proportional to gap^2: compare the speed at s = 0 with s = 1/2.
  const double h = 1e-4;
  const double t_half = [&] {
    double lo = 0, hi = T;
    for (int i = 0; i < 80; ++i) {
      const double mid = 0.5 * (lo + hi);
      (s(mid) < 0.5 ? lo : hi) = mid;
    }
    return lo;
  }();
  const double v0 = (s(h) - s(0)) / h;
  const double vm = (s(t_half + h) - s(t_half - h)) / (2 * h);
  CHECK_THAT(v0 / vm, WithinAbs(4.0, 0.1));
}

TEST_CASE("gap-adapted schedule rejects bad profiles") {
  auto p = synthetic([](double s) { return std::abs(s - 0.5); });
  CHECK_THROWS_AS(Schedule::gap_adapted(p, 1.0), ZeroGapError);
  SpectralProfile partial;
  partial.s_grid = {0.0, 0.5};
  partial.gaps = {1.0, 1.0};
  CHECK_THROWS_AS(Schedule::gap_adapted(partial, 1.0), InvalidArgument);
}

TEST_CASE("delayed schedule holds then compresses") {
  const auto s = Schedule::linear(10.0).delayed(2.0);
  CHECK(s(1.0) == 0.0);
  CHECK(s(2.0) == 0.0);
  CHECK_THAT(s(6.0), WithinAbs(0.5, 1e-15));
  CHECK(s(10.0) == 1.0);
  CHECK(s.lag() == 2.0);
  CHECK_THROWS_AS(Schedule::linear(10.0).delayed(10.0), InvalidArgument);
}

TEST_CASE("tabulated schedule") {
  const auto s = Schedule::tabulated({0.0, 1.0, 4.0}, {0.0, 0.5, 1.0});
  CHECK(s.total_time() == 4.0);
  CHECK_THAT(s(0.5), WithinAbs(0.25, 1e-15));
  CHECK_THAT(s(2.5), WithinAbs(0.75, 1e-15));
  CHECK_THROWS_AS(Schedule::tabulated({0.0, 1.0}, {0.0, 0.5}), InvalidArgument);
  CHECK_THROWS_AS(Schedule::tabulated({0.0, 2.0, 1.0}, {0.0, 0.5, 1.0}), InvalidArgument);
  CHECK_THROWS_AS(Schedule::tabulated({0.0, 1.0, 2.0}, {0.0, 0.7, 0.5}), InvalidArgument);
}

TEST_CASE("term schedules and the coherence condition") {
  auto ts = TermSchedule::synchronized(Schedule::linear(5.0));
  CHECK(ts.components.size() == 6);
  CHECK(ts.satisfies_coherence());
  ts.set("14", Schedule::linear(5.0).delayed(1.0));
  CHECK_FALSE(ts.satisfies_coherence());
  ts.set("14", Schedule::linear(5.0));
  ts.set("F", Schedule::linear(5.0).delayed(1.0));
  CHECK_FALSE(ts.satisfies_coherence());
  CHECK_THROWS_AS(ts.set("13", Schedule::linear(5.0)), InvalidArgument);
  CHECK_THROWS_AS(ts.at("X"), InvalidArgument);
}
