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

#include <random>

#include "oracle.hpp"
#include "pagt/errors.hpp"
#include "pagt/sector.hpp"
#include "pagt/spectral.hpp"

using namespace pagt;

TEST_CASE("sector dimensions are binomial") {
  const auto s3 = sector_decompose(3);
  REQUIRE(s3.size() == 4);
  CHECK(s3[0].dimension() == 1);
  CHECK(s3[1].dimension() == 3);
  CHECK(s3[2].dimension() == 3);
  CHECK(s3[3].dimension() == 1);
  CHECK(s3[0].twice_k == -3);
  CHECK(sector_basis(5, 1).dimension() == 10);
  CHECK(sector_decompose(9).size() == 10);
  CHECK_THROWS_AS(sector_basis(3, 0), InvalidArgument);
}

TEST_CASE("sector membership follows the popcount") {
  const auto s = sector_basis(7, 1);
  for (Index x : s.states) CHECK(std::popcount(x) == 3);
  CHECK(s.position(s.states[5]) == 5);
  CHECK(s.position(0) == s.dimension());
}

TEST_CASE("spin chain has no off-sector blocks") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int L = 1; L <= 5; ++L) {
    for (int t = 0; t < 3; ++t) {
      const auto h = spin_chain_hamiltonian(L, 0.5, u(rng));
      for (const auto& sec : sector_decompose(2 * L + 1)) CHECK(sector_leakage_norm(h, sec) < 1e-12);
    }
  }
}

TEST_CASE("restricted block matches the explicit dense block") {
  const auto h = spin_chain_hamiltonian(2, 0.5, 0.3);
  const auto sec = sector_basis(5, 1);
  const oracle::Mat full = h.to_dense();
  const Eigen::MatrixXd block = restrict_to_sector(h, sec);
  for (Index a = 0; a < sec.dimension(); ++a)
    for (Index b = 0; b < sec.dimension(); ++b)
      CHECK(std::abs(block(a, b) - full(sec.states[a], sec.states[b])) < 1e-14);
}

TEST_CASE("restriction rejects leaking operators") {
  OperatorSum x(3);
  x.add(PauliString(3, 1.0, {{0, Pauli::X}}));
  CHECK_THROWS_AS(restrict_to_sector(x, sector_basis(3, 1)), InvalidArgument);
  CHECK(sector_leakage_norm(x, sector_basis(3, 1)) > 1.0);
}
