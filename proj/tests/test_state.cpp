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
#include "pagt/state.hpp"
#include "pagt/unitary.hpp"

using namespace pagt;
using Catch::Matchers::WithinAbs;

TEST_CASE("mes_state amplitudes and stabilizers") {
  const auto f = mes_state(1, 2);
  CHECK(f.qubits == std::vector<int>{1, 2});
  CHECK_THAT(f.amplitudes(0).real(), WithinAbs(1 / std::sqrt(2.0), 1e-15));
  CHECK_THAT(f.amplitudes(3).real(), WithinAbs(1 / std::sqrt(2.0), 1e-15));
  CHECK(std::abs(f.amplitudes(1)) + std::abs(f.amplitudes(2)) == 0.0);
  CHECK_THAT(f.amplitudes.squaredNorm(), WithinAbs(1.0, 1e-15));
  const oracle::Vec v = f.amplitudes;
  CHECK((oracle::kron(oracle::X(), oracle::X()) * v - v).norm() < 1e-15);
  CHECK((oracle::kron(oracle::Z(), oracle::Z()) * v - v).norm() < 1e-15);
  CHECK((-oracle::kron(oracle::Y(), oracle::Y()) * v - v).norm() < 1e-15);
  CHECK_THROWS_AS(mes_state(1, 1), InvalidArgument);
}

TEST_CASE("matrix_state of I and X") {
  CHECK((matrix_state({Matrix2::Identity(), 0, 1}).amplitudes - oracle::mes()).norm() < 1e-15);
  const auto x = matrix_state({oracle::X(), 0, 1}).amplitudes;
  CHECK_THAT(x(1).real(), WithinAbs(1 / std::sqrt(2.0), 1e-15));
  CHECK_THAT(x(2).real(), WithinAbs(1 / std::sqrt(2.0), 1e-15));
  CHECK_THROWS_AS(BipartiteMatrixState(0.5 * Matrix2::Identity(), 0, 1), InvalidArgument);
}

TEST_CASE("(A x B^T)|C>> = |ACB>> for random triples") {
  std::mt19937_64 rng(100);
  for (int trial = 0; trial < 100; ++trial) {
    const oracle::M2 a = oracle::random_matrix(rng), b = oracle::random_matrix(rng);
    oracle::M2 c = oracle::random_matrix(rng);
    c *= std::sqrt(2.0) / c.norm();
    const oracle::Vec lhs = oracle::kron(a, b.transpose()) * matrix_state({c, 0, 1}).amplitudes;
    const oracle::M2 acb = a * c * b;
    oracle::Vec rhs(4);
    for (int k = 0; k < 4; ++k) rhs(k) = acb(k / 2, k % 2) / std::sqrt(2.0);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("compose orders fragments by qubit") {
  const auto psi = compose(3, {single_qubit(1, oracle::Vec::Unit(2, 1)), mes_state(2, 0)});
  const auto ref = oracle::embed_state(3, {{{1}, oracle::Vec::Unit(2, 1)}, {{2, 0}, oracle::mes()}});
  CHECK((psi.amplitudes() - ref).norm() < 1e-15);
  CHECK_THROWS_AS(compose(3, {mes_state(0, 1)}), InvalidArgument);
  CHECK_THROWS_AS(compose(2, {mes_state(0, 1), single_qubit(1, oracle::zero())}), InvalidArgument);
}

TEST_CASE("apply_local_unitary") {
  const auto one = apply_local_unitary(StateVector::basis(1, 0), SingleQubitUnitary::pauli_x(), 0);
  CHECK(std::abs(one[1] - 1.0) < 1e-15);
  std::mt19937_64 rng(7);
  const oracle::M2 u = oracle::random_unitary(rng);
  const auto pair = compose(4, {single_qubit(0, oracle::zero()), single_qubit(1, oracle::plus()), mes_state(2, 3)});
  auto rotated = apply_local_unitary(pair, SingleQubitUnitary(u.conjugate()), 2);
  rotated = apply_local_unitary(rotated, SingleQubitUnitary(u), 3);
  CHECK(fidelity(rotated, pair) > 1 - 1e-12);
  const StateVector r(5, oracle::random_state(rng, 32));
  const auto out = apply_local_unitary(r, SingleQubitUnitary(u), 3);
  CHECK_THAT(out.norm(), WithinAbs(1.0, 1e-12));
  CHECK((out.amplitudes() - oracle::product(5, {{3, u}}) * r.amplitudes()).norm() < 1e-12);
  CHECK_THROWS_AS(apply_local_unitary(r, SingleQubitUnitary(u), 5), InvalidArgument);
}

TEST_CASE("apply_cswap") {
  const auto off = StateVector::basis(3, 0b001);
  CHECK(fidelity(apply_cswap(off, 0, 1, 2), off) == 1.0);
  const auto on = StateVector::basis(3, 0b101);
  CHECK(std::abs(apply_cswap(on, 0, 1, 2)[0b110] - 1.0) < 1e-15);
  std::mt19937_64 rng(1);
  const StateVector r(4, oracle::random_state(rng, 16));
  CHECK((apply_cswap(apply_cswap(r, 2, 0, 3), 2, 0, 3).amplitudes() - r.amplitudes()).norm() < 1e-15);
  CHECK_THROWS_AS(apply_cswap(r, 1, 1, 2), InvalidArgument);
}

TEST_CASE("reduced density matrix agrees with the partial trace oracle") {
  std::mt19937_64 rng(12);
  const auto psi = oracle::random_state(rng, 32);
  for (const auto& keep : std::vector<std::vector<int>>{{0}, {3, 1}, {0, 2, 4}}) {
    CHECK((reduced_density_matrix(psi, 5, keep) - oracle::partial_trace_keep(psi, 5, keep)).norm() < 1e-12);
  }
}

TEST_CASE("state validation") {
  CHECK_THROWS_AS(StateVector(2, oracle::Vec::Ones(4)), InvalidArgument);
  CHECK_THROWS_AS(StateVector(2, oracle::Vec::Unit(3, 0)), InvalidArgument);
  CHECK_THROWS_AS(StateVector::basis(2, 4), InvalidArgument);
}
