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

#include "pagt/state.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "pagt/errors.hpp"

namespace pagt {

namespace {

void check_index(int n, int q, const char* what) {
  if (q < 0 || q >= n) throw InvalidArgument(std::string(what) + " qubit index out of range");
}

}  // namespace

StateVector::StateVector(int n_qubits, ComplexVector amplitudes, double tol)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  if (n_qubits < 1 || n_qubits > 30) throw InvalidArgument("state qubit count must be in [1, 30]");
  if (static_cast<Index>(amps_.size()) != dimension())
    throw InvalidArgument("state length " + std::to_string(amps_.size()) + " is not 2^" +
                          std::to_string(n_qubits));
  if (!amps_.allFinite()) throw InvalidArgument("state has non-finite amplitudes");
  if (std::abs(amps_.norm() - 1.0) > tol) throw InvalidArgument("state is not normalized");
}

StateVector StateVector::basis(int n_qubits, Index index) {
  if (n_qubits < 1 || n_qubits > 30) throw InvalidArgument("state qubit count must be in [1, 30]");
  if (index >= (Index{1} << n_qubits)) throw InvalidArgument("basis index out of range");
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(Index{1} << n_qubits));
  v[static_cast<Eigen::Index>(index)] = 1.0;
  return StateVector(n_qubits, std::move(v));
}

StateVector compose(int n_qubits, const std::vector<StateFragment>& fragments) {
  std::vector<int> owner(static_cast<std::size_t>(n_qubits), -1);
  for (std::size_t f = 0; f < fragments.size(); ++f) {
    const auto& frag = fragments[f];
    if (static_cast<Index>(frag.amplitudes.size()) != (Index{1} << frag.qubits.size()))
      throw InvalidArgument("fragment amplitude count does not match its qubits");
    for (int q : frag.qubits) {
      check_index(n_qubits, q, "fragment");
      if (owner[static_cast<std::size_t>(q)] >= 0) throw InvalidArgument("qubit covered by two fragments");
      owner[static_cast<std::size_t>(q)] = static_cast<int>(f);
    }
  }
  for (int q = 0; q < n_qubits; ++q)
    if (owner[static_cast<std::size_t>(q)] < 0)
      throw InvalidArgument("qubit " + std::to_string(q) + " not covered by any fragment");

  const Index dim = Index{1} << n_qubits;
  ComplexVector v(static_cast<Eigen::Index>(dim));
  for (Index x = 0; x < dim; ++x) {
    Complex a = 1.0;
    for (const auto& frag : fragments) {
      Index local = 0;
      for (int q : frag.qubits) local = (local << 1) | ((x & qubit_bit(n_qubits, q)) ? 1 : 0);
      a *= frag.amplitudes[static_cast<Eigen::Index>(local)];
    }
    v[static_cast<Eigen::Index>(x)] = a;
  }
  return StateVector(n_qubits, std::move(v));
}

StateFragment single_qubit(int q, const ComplexVector& amplitudes) {
  if (amplitudes.size() != 2) throw InvalidArgument("single-qubit state needs two amplitudes");
  return {{q}, amplitudes};
}

StateFragment mes_state(int i, int j) {
  if (i == j) throw InvalidArgument("maximally entangled pair needs distinct qubits");
  ComplexVector v = ComplexVector::Zero(4);
  v[0] = v[3] = 1.0 / std::numbers::sqrt2;
  return {{i, j}, v};
}

BipartiteMatrixState::BipartiteMatrixState(const Matrix2& c, int i_, int j_, double tol)
    : C(c), i(i_), j(j_) {
  if (i == j) throw InvalidArgument("bipartite state needs distinct qubits");
  const double s = c.squaredNorm();
  if (std::abs(s - 2.0) > tol)
    throw InvalidArgument("matrix state needs sum |C_ab|^2 = 2, got " + std::to_string(s));
}

StateFragment matrix_state(const BipartiteMatrixState& c) {
  ComplexVector v(4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) v[2 * a + b] = c.C(a, b) / std::numbers::sqrt2;
  return {{c.i, c.j}, v};
}

ComplexVector apply_local_matrix(const ComplexVector& psi, int n_qubits, const Matrix2& m, int q) {
  check_index(n_qubits, q, "target");
  const Index bit = qubit_bit(n_qubits, q);
  ComplexVector out = psi;
  const Index dim = static_cast<Index>(psi.size());
  for (Index x = 0; x < dim; ++x) {
    if (x & bit) continue;
    const auto i0 = static_cast<Eigen::Index>(x), i1 = static_cast<Eigen::Index>(x | bit);
    const Complex a0 = psi[i0], a1 = psi[i1];
    out[i0] = m(0, 0) * a0 + m(0, 1) * a1;
    out[i1] = m(1, 0) * a0 + m(1, 1) * a1;
  }
  return out;
}

ComplexVector apply_cswap(const ComplexVector& psi, int n_qubits, int control, int a, int b) {
  check_index(n_qubits, control, "control");
  check_index(n_qubits, a, "swap");
  check_index(n_qubits, b, "swap");
  if (control == a || control == b || a == b) throw InvalidArgument("C-SWAP qubits must be distinct");
  const Index cb = qubit_bit(n_qubits, control), ab = qubit_bit(n_qubits, a), bb = qubit_bit(n_qubits, b);
  ComplexVector out = psi;
  const Index dim = static_cast<Index>(psi.size());
  for (Index x = 0; x < dim; ++x) {
    if ((x & cb) && (x & ab) && !(x & bb)) {
      const Index y = x ^ ab ^ bb;
      std::swap(out[static_cast<Eigen::Index>(x)], out[static_cast<Eigen::Index>(y)]);
    }
  }
  return out;
}

StateVector apply_local_unitary(const StateVector& psi, const SingleQubitUnitary& u, int q) {
  return StateVector(psi.n_qubits(), apply_local_matrix(psi.amplitudes(), psi.n_qubits(), u.matrix(), q));
}

StateVector apply_cswap(const StateVector& psi, int control, int a, int b) {
  return StateVector(psi.n_qubits(), apply_cswap(psi.amplitudes(), psi.n_qubits(), control, a, b));
}

Complex inner(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits()) throw InvalidArgument("inner product of mismatched registers");
  return a.amplitudes().dot(b.amplitudes());
}

double fidelity(const ComplexVector& a, const ComplexVector& b) {
  if (a.size() != b.size()) throw InvalidArgument("fidelity of mismatched vectors");
  return std::norm(a.dot(b));
}

double fidelity(const StateVector& a, const StateVector& b) { return std::norm(inner(a, b)); }

ComplexMatrix reduced_density_matrix(const ComplexVector& psi, int n_qubits, const std::vector<int>& keep) {
  if (keep.empty()) throw InvalidArgument("reduced state needs at least one kept qubit");
  std::vector<bool> kept(static_cast<std::size_t>(n_qubits), false);
  for (int q : keep) {
    check_index(n_qubits, q, "kept");
    if (kept[static_cast<std::size_t>(q)]) throw InvalidArgument("kept qubit listed twice");
    kept[static_cast<std::size_t>(q)] = true;
  }
  std::vector<int> rest;
  for (int q = 0; q < n_qubits; ++q)
    if (!kept[static_cast<std::size_t>(q)]) rest.push_back(q);
  const auto dk = static_cast<Eigen::Index>(Index{1} << keep.size());
  const auto dr = static_cast<Eigen::Index>(Index{1} << rest.size());
  ComplexMatrix m(dk, dr);
  const Index dim = static_cast<Index>(psi.size());
  for (Index x = 0; x < dim; ++x) {
    Index ik = 0, ir = 0;
    for (int q : keep) ik = (ik << 1) | ((x & qubit_bit(n_qubits, q)) ? 1 : 0);
    for (int q : rest) ir = (ir << 1) | ((x & qubit_bit(n_qubits, q)) ? 1 : 0);
    m(static_cast<Eigen::Index>(ik), static_cast<Eigen::Index>(ir)) = psi[static_cast<Eigen::Index>(x)];
  }
  return m * m.adjoint();
}

}  // namespace pagt
