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
#include "pagt/pauli.hpp"

using namespace pagt;
using Catch::Matchers::WithinAbs;

namespace {

OperatorSum random_operator(int n, int n_terms, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  std::normal_distribution<double> g;
  OperatorSum h(n);
  for (int t = 0; t < n_terms; ++t) {
    std::vector<PauliFactor> f;
    for (int q = 0; q < n; ++q) {
      const auto p = static_cast<Pauli>(pick(rng));
      if (p != Pauli::I) f.push_back({q, p});
    }
    h.add(PauliString(n, g(rng), f));
  }
  return h;
}

oracle::M2 factor_matrix(Pauli p) {
  switch (p) {
    case Pauli::X: return oracle::X();
    case Pauli::Y: return oracle::Y();
    case Pauli::Z: return oracle::Z();
    default: return oracle::I2();
  }
}

oracle::Mat kron_reference(const OperatorSum& h) {
  const int n = h.n_qubits();
  oracle::Mat out = oracle::Mat::Zero(1 << n, 1 << n);
  for (const auto& t : h.terms()) {
    std::map<int, oracle::M2> ops;
    for (const auto& f : t.factors()) ops[f.qubit] = factor_matrix(f.op);
    out += t.coefficient() * oracle::product(n, ops);
  }
  return out;
}

}  // namespace

TEST_CASE("pauli string rejects malformed factors") {
  CHECK_THROWS_AS(PauliString(3, 1.0, {{3, Pauli::X}}), InvalidArgument);
  CHECK_THROWS_AS(PauliString(3, 1.0, {{1, Pauli::X}, {1, Pauli::Z}}), InvalidArgument);
  CHECK_THROWS_AS(PauliString(3, NAN, {}), InvalidArgument);
  CHECK_THROWS_AS(OperatorSum(0), InvalidArgument);
}

TEST_CASE("pauli string masks and labels") {
  PauliString p(4, 2.0, {{3, Pauli::Y}, {0, Pauli::X}});
  CHECK(p.label() == "X0 Y3");
  CHECK(p.x_mask() == 0b1001);
  CHECK(p.z_mask() == 0b0001);
  CHECK(p.y_count() == 1);
  CHECK(PauliString::identity(2).label() == "I");
  CHECK(p.at(1) == Pauli::I);
}

TEST_CASE("apply_to_basis matches the Kronecker matrix") {
  PauliString p(3, 1.0, {{0, Pauli::Y}, {2, Pauli::Z}});
  const oracle::Mat ref = oracle::product(3, {{0, oracle::Y()}, {2, oracle::Z()}});
  for (Index x = 0; x < 8; ++x) {
    auto [y, phase] = p.apply_to_basis(x);
    CHECK(std::abs(ref(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) - phase) < 1e-15);
  }
}

TEST_CASE("add merges equal strings and canonical drops zeros") {
  OperatorSum h(2);
  h.add(PauliString(2, 1.5, {{0, Pauli::Z}}));
  h.add(PauliString(2, -1.5, {{0, Pauli::Z}}));
  h.add(PauliString(2, 0.25, {{1, Pauli::X}}));
  const auto c = h.canonical();
  REQUIRE(c.terms().size() == 1);
  CHECK(c.coefficient_of(PauliString(2, 1.0, {{1, Pauli::X}})) == 0.25);
  CHECK(c.coefficient_of(PauliString(2, 1.0, {{0, Pauli::Z}})) == 0.0);
}

TEST_CASE("dense, sparse and matrix-free products agree with the reference") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + trial % 5;
    const auto h = random_operator(n, 6, rng);
    const oracle::Mat ref = kron_reference(h);
    CHECK((h.to_dense() - ref).norm() < 1e-12);
    CHECK((oracle::Mat(h.to_sparse()) - ref).norm() < 1e-12);
    const auto x = oracle::random_state(rng, ref.rows());
    CHECK((h.apply(x) - ref * x).norm() < 1e-12);
    CHECK_THAT(h.expectation(x), WithinAbs(x.dot(ref * x).real(), 1e-12));
  }
}

TEST_CASE("materialization round trip through from_dense") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = random_operator(4, 8, rng).canonical();
    const auto back = OperatorSum::from_dense(h.to_dense()).canonical();
    CHECK((back.to_dense() - h.to_dense()).norm() < 1e-12);
    CHECK(back.terms().size() == h.terms().size());
  }
}

TEST_CASE("from_dense rejects non-Hermitian input") {
  oracle::Mat m = oracle::Mat::Zero(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(OperatorSum::from_dense(m), InvalidArgument);
  CHECK_THROWS_AS(OperatorSum::from_dense(oracle::Mat::Identity(3, 3)), InvalidArgument);
}

TEST_CASE("dense materialization is capped") {
  OperatorSum big(13);
  big.add(PauliString(13, 1.0, {{0, Pauli::Z}}));
  CHECK_THROWS_AS(big.to_dense(), InvalidArgument);
  CHECK(big.to_sparse().nonZeros() == 8192);
}

TEST_CASE("arithmetic is linear") {
  std::mt19937_64 rng(5);
  const auto a = random_operator(3, 4, rng);
  const auto b = random_operator(3, 4, rng);
  CHECK(((2.0 * a - b).to_dense() - (2.0 * a.to_dense() - b.to_dense())).norm() < 1e-12);
  CHECK_THROWS_AS(a + OperatorSum(2), InvalidArgument);
}

TEST_CASE("coefficient norm bounds the spectrum") {
  std::mt19937_64 rng(9);
  const auto h = random_operator(4, 10, rng);
  const auto ev = oracle::spectrum(h.to_dense());
  CHECK(std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1))) <= h.coefficient_norm() + 1e-12);
}
