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

#include <fstream>
#include <sstream>

#include "commands.hpp"

using namespace pagt;
using namespace pagt::cli;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<double> column(const std::string& csv, std::size_t col) {
  std::vector<double> out;
  const auto ls = lines(csv);
  for (std::size_t i = 1; i < ls.size(); ++i) {
    std::istringstream row(ls[i]);
    std::string cell;
    for (std::size_t c = 0; c <= col; ++c) std::getline(row, cell, ',');
    out.push_back(std::stod(cell));
  }
  return out;
}

CommonOptions quiet() {
  CommonOptions o;
  o.header_meta = false;
  return o;
}

}  // namespace

TEST_CASE("L ranges") {
  int lo = 0, hi = 0;
  parse_L_range("3", lo, hi);
  CHECK((lo == 3 && hi == 3));
  parse_L_range("1..6", lo, hi);
  CHECK((lo == 1 && hi == 6));
  CHECK_THROWS(parse_L_range("4..2", lo, hi));
  CHECK_THROWS(parse_L_range("a", lo, hi));
  CHECK(fmt(1.0 / 3.0) == "0.333333333333");
}

TEST_CASE("gap-scan for L=1 follows the closed form") {
  std::ostringstream out, err;
  REQUIRE(cmd_gap_scan(quiet(), out, err) == kOk);
  const auto ls = lines(out.str());
  CHECK(ls.front() == "L,omega,s,gap,ground_energy");
  REQUIRE(ls.size() == 102);
  const auto s = column(out.str(), 2), gap = column(out.str(), 3);
  for (std::size_t i = 0; i < s.size(); ++i)
    CHECK(std::abs(gap[i] - 2 * std::sqrt(1 - 3 * s[i] + 3 * s[i] * s[i])) < 1e-8);
}

TEST_CASE("gap-scan with a coarse step and several L") {
  auto o = quiet();
  o.s_step = 0.5;
  o.L_hi = 3;
  std::ostringstream out, err;
  REQUIRE(cmd_gap_scan(o, out, err) == kOk);
  CHECK(lines(out.str()).size() == 10);
  const auto s = column(out.str(), 2);
  CHECK(s[0] == 0.0);
  CHECK(s[1] == 0.5);
  CHECK(s[2] == 1.0);
}

TEST_CASE("gap-scan minima sit at one half") {
  auto o = quiet();
  o.L_hi = 4;
  std::ostringstream out, err;
  REQUIRE(cmd_figure("fig6", o, {}, out, err) == kOk);
  for (double s : column(out.str(), 2)) CHECK(s == 0.5);
}

TEST_CASE("norm-check rows respect the bounds and scale with omega") {
  auto o = quiet();
  o.L_hi = 3;
  std::ostringstream a, b, err;
  REQUIRE(cmd_norm_check(o, a, err) == kOk);
  const auto norm = column(a.str(), 1), lo = column(a.str(), 2), hi = column(a.str(), 3);
  for (std::size_t i = 0; i < norm.size(); ++i) CHECK((lo[i] <= norm[i] && norm[i] <= hi[i]));
  o.omega = 1.0;
  REQUIRE(cmd_norm_check(o, b, err) == kOk);
  const auto doubled = column(b.str(), 1);
  for (std::size_t i = 0; i < norm.size(); ++i) CHECK(std::abs(doubled[i] - 2 * norm[i]) < 1e-9);
}

TEST_CASE("timing row for L=1") {
  std::ostringstream out, err;
  REQUIRE(cmd_timing(quiet(), {}, out, err) == kOk);
  CHECK(lines(out.str()).front() == "L,G_L,s_star,norm_diff,T_e,T_L,linear_bound_T");
  CHECK(column(out.str(), 1)[0] == 1.0);
}

TEST_CASE("output is deterministic and the meta line is optional") {
  auto o = quiet();
  o.L_hi = 2;
  o.threads = 2;
  std::ostringstream a, b, err;
  cmd_gap_scan(o, a, err);
  o.threads = 1;
  cmd_gap_scan(o, b, err);
  CHECK(a.str() == b.str());
  o.header_meta = true;
  std::ostringstream c;
  cmd_gap_scan(o, c, err);
  CHECK(lines(c.str()).front().rfind("# pagt", 0) == 0);
  CHECK(c.str().substr(c.str().find('\n') + 1) == b.str());
}

TEST_CASE("scheme command exit codes") {
  std::ostringstream out, err;
  CHECK(cmd_scheme(std::string(PAGT_SPECS_DIR) + "/at.json", quiet(), out, err) == kOk);
  CHECK(out.str().find("\"verdict\": \"pass\"") != std::string::npos);
  std::ostringstream out2, err2;
  CHECK(cmd_scheme(std::string(PAGT_SPECS_DIR) + "/ctrl_u_naive_x.json", quiet(), out2, err2) == kOk);
  CHECK(out2.str().find("documented-failure-confirmed") != std::string::npos);
  std::ostringstream out3, err3;
  CHECK(cmd_scheme("/nonexistent/spec.json", quiet(), out3, err3) == kInvalidInput);
  CHECK(err3.str().find("\"error\"") != std::string::npos);
}

TEST_CASE("invalid specs are rejected with pointers") {
  const std::string path = "pagt_test_invalid_spec.json";
  std::ofstream(path) << R"({"scheme": "AGT", "unitaries": [[[1, 1], [0, 1]]], "extra": 1})";
  std::ostringstream out, err;
  CHECK(cmd_scheme(path, quiet(), out, err) == kInvalidInput);
  CHECK(err.str().find("/unitaries/0") != std::string::npos);
  CHECK(err.str().find("/extra") != std::string::npos);
  CHECK(out.str().empty());
}

TEST_CASE("evolve writes a trace") {
  std::ostringstream out, err;
  REQUIRE(cmd_evolve(std::string(PAGT_SPECS_DIR) + "/at.json", 50, quiet(), out, err) == kOk);
  const auto ls = lines(out.str());
  CHECK(ls.front() == "t,s,fidelity_to_target,leakage,norm");
  CHECK(ls.size() > 3);
  CHECK(column(out.str(), 2).back() > 0.99);
}

TEST_CASE("unknown figure and bad ranges fail cleanly") {
  std::ostringstream out, err;
  CHECK(cmd_figure("fig9", quiet(), {}, out, err) == kInvalidInput);
  auto o = quiet();
  o.L_hi = 20;
  CHECK(cmd_gap_scan(o, out, err) == kInvalidInput);
}
