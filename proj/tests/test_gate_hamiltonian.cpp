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
#include "pagt/gate_hamiltonian.hpp"
#include "pagt/unitary.hpp"

using namespace pagt;
using Catch::Matchers::WithinAbs;

TEST_CASE("identity gate Hamiltonian expands to the four Pauli pairs") {
  const double w = 0.5;
  const auto h = gate_hamiltonian(4, SingleQubitUnitary::identity(), 2, 3, w).canonical();
  REQUIRE(h.terms().size() == 4);
  CHECK_THAT(h.coefficient_of(PauliString::identity(4)), WithinAbs(-w, 1e-15));
  CHECK_THAT(h.coefficient_of(PauliString(4, 1, {{2, Pauli::X}, {3, Pauli::X}})), WithinAbs(-w, 1e-15));
  CHECK_THAT(h.coefficient_of(PauliString(4, 1, {{2, Pauli::Y}, {3, Pauli::Y}})), WithinAbs(w, 1e-15));
  CHECK_THAT(h.coefficient_of(PauliString(4, 1, {{2, Pauli::Z}, {3, Pauli::Z}})), WithinAbs(-w, 1e-15));
}

TEST_CASE("identity gate Hamiltonian spectrum is -4w once and 0 three times") {
  const double w = 0.7;
  const auto ev = oracle::spectrum(gate_hamiltonian(2, SingleQubitUnitary::identity(), 0, 1, w).to_dense());
  CHECK_THAT(ev(0), WithinAbs(-4 * w, 1e-12));
  for (int k = 1; k < 4; ++k) CHECK_THAT(ev(k), WithinAbs(0.0, 1e-12));
}

TEST_CASE("X gate Hamiltonian ground state is (I x X)|I>>") {
  const double w = 0.5;
  const auto m = gate_hamiltonian(2, SingleQubitUnitary::pauli_x(), 0, 1, w).to_dense();
  Eigen::SelfAdjointEigenSolver<oracle::Mat> es(m);
  CHECK_THAT(es.eigenvalues()(0), WithinAbs(-4 * w, 1e-12));
  CHECK_THAT(oracle::fidelity(es.eigenvectors().col(0), oracle::pair_state(oracle::X())), WithinAbs(1.0, 1e-12));
}

TEST_CASE("gate Hamiltonian equals the projector construction for random unitaries") {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 50; ++trial) {
    const oracle::M2 u = oracle::random_unitary(rng);
    const int i = trial % 4, j = (trial / 4 + i + 1) % 4;
    if (i == j) continue;
    const double w = 0.1 + 0.05 * trial;
    const oracle::Mat m = gate_hamiltonian(4, SingleQubitUnitary(u), i, j, w).to_dense();
    CHECK((m - oracle::gate_h(4, u, i, j, w)).norm() < 1e-12);
    const oracle::Mat p = -m / (4 * w);
    CHECK((p * p - p).norm() < 1e-12);
    CHECK((p - p.adjoint()).norm() < 1e-12);
    CHECK_THAT(p.trace().real() / 4.0, WithinAbs(1.0, 1e-12));  // two idle qubits
  }
}

TEST_CASE("gate Hamiltonian validates its arguments") {
  const auto u = SingleQubitUnitary::identity();
  CHECK_THROWS_AS(gate_hamiltonian(3, u, 1, 1, 0.5), InvalidArgument);
  CHECK_THROWS_AS(gate_hamiltonian(3, u, 0, 3, 0.5), InvalidArgument);
  CHECK_THROWS_AS(gate_hamiltonian(3, u, 0, 1, 0.0), InvalidArgument);
  oracle::M2 bad = oracle::M2::Identity();
  bad(0, 1) = 0.3;
  CHECK_THROWS_AS(SingleQubitUnitary(bad), InvalidArgument);
}

TEST_CASE("conjugation by the identity is a no-op") {
  const auto h = gate_hamiltonian(4, SingleQubitUnitary::identity(), 2, 3, 0.5);
  const auto c = conjugate_operator(h, SingleQubitUnitary::identity(), 3);
  CHECK((c.to_dense() - h.to_dense()).norm() < 1e-14);
}

TEST_CASE("conjugating H_I on the second qubit gives H_U") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const SingleQubitUnitary u(oracle::random_unitary(rng));
    const auto h = gate_hamiltonian(4, SingleQubitUnitary::identity(), 2, 3, 0.5);
    const auto c = conjugate_operator(h, u, 3);
    CHECK((c.to_dense() - gate_hamiltonian(4, u, 2, 3, 0.5).to_dense()).norm() < 1e-12);
    const auto e0 = oracle::spectrum(h.to_dense()), e1 = oracle::spectrum(c.to_dense());
    CHECK((e0 - e1).norm() < 1e-12);
  }
}

TEST_CASE("controlled operator and its blocks") {
  const auto h = gate_hamiltonian(3, SingleQubitUnitary::hadamard(), 1, 2, 0.5);
  const auto c0 = controlled(h, 0, 0), c1 = controlled(h, 0, 1);
  CHECK((c0.to_dense() - oracle::projector(3, 0, 0) * h.to_dense()).norm() < 1e-12);
  CHECK((c1.to_dense() - oracle::projector(3, 0, 1) * h.to_dense()).norm() < 1e-12);
  const auto mixed = c0 + 2.0 * controlled(gate_hamiltonian(3, SingleQubitUnitary::identity(), 1, 2, 0.5), 0, 1);
  CHECK((control_block(mixed, 0, 0).to_dense() - gate_hamiltonian(2, SingleQubitUnitary::hadamard(), 0, 1, 0.5).to_dense()).norm() < 1e-12);
  CHECK((control_block(mixed, 0, 1).to_dense() - 2.0 * oracle::gate_h(2, oracle::I2(), 0, 1, 0.5)).norm() < 1e-12);
  CHECK_THROWS_AS(controlled(h, 1, 0), InvalidArgument);
  CHECK_THROWS_AS(control_block(h, 1, 0), InvalidArgument);
}

TEST_CASE("named unitaries and algebra") {
  CHECK(SingleQubitUnitary::named("Rz(0.3)").approx_equal(SingleQubitUnitary::rz(0.3)));
  CHECK(SingleQubitUnitary::named("R(1.5707963267948966)").approx_equal(SingleQubitUnitary(oracle::Rot(M_PI / 2))));
  CHECK(SingleQubitUnitary::named("T").approx_equal(SingleQubitUnitary(oracle::T())));
  CHECK_THROWS_AS(SingleQubitUnitary::named("Q"), InvalidArgument);
  CHECK_THROWS_AS(SingleQubitUnitary::named("Ry(abc)"), InvalidArgument);
  const auto s = SingleQubitUnitary::phase_s();
  CHECK((s * s.adjoint()).approx_equal(SingleQubitUnitary::identity()));
  CHECK(SingleQubitUnitary::rotation(0.4).is_real_orthogonal());
  CHECK_FALSE(s.is_real_orthogonal());
}

TEST_CASE("principal square roots") {
  const auto r = SingleQubitUnitary::rotation(M_PI / 2).principal_sqrt();
  CHECK(r.approx_equal(SingleQubitUnitary::rotation(M_PI / 4), 1e-12));
  const auto z = SingleQubitUnitary::pauli_z().principal_sqrt();
  CHECK(z.approx_equal(SingleQubitUnitary(oracle::S()), 1e-12));
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    const SingleQubitUnitary u(oracle::random_unitary(rng));
    const auto v = u.principal_sqrt();
    CHECK((v * v).approx_equal(u, 1e-10));
  }
}
