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

#include "pagt/gate_hamiltonian.hpp"

#include <array>
#include <cmath>

#include "pagt/errors.hpp"

namespace pagt {

namespace {

constexpr std::array<Pauli, 4> kAll = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};

// Real coefficients r_Q with U P U^dagger = sum_Q r_Q Q.
std::array<double, 4> conjugated_pauli(const Matrix2& u, Pauli p) {
  const Matrix2 m = u * pauli_matrix(p) * u.adjoint();
  std::array<double, 4> r{};
  for (std::size_t k = 0; k < 4; ++k) r[k] = (pauli_matrix(kAll[k]) * m).trace().real() / 2.0;
  return r;
}

PauliString replace_factor(const PauliString& t, int q, Pauli op, double coefficient) {
  std::vector<PauliFactor> f;
  for (const auto& x : t.factors())
    if (x.qubit != q) f.push_back(x);
  if (op != Pauli::I) f.push_back({q, op});
  return PauliString(t.n_qubits(), coefficient, std::move(f));
}

}  // namespace

OperatorSum conjugate_operator(const OperatorSum& h, const SingleQubitUnitary& u, int q) {
  if (q < 0 || q >= h.n_qubits()) throw InvalidArgument("conjugation qubit out of range");
  OperatorSum out(h.n_qubits());
  for (const auto& t : h.terms()) {
    const Pauli p = t.at(q);
    if (p == Pauli::I) {
      out.add(t);
      continue;
    }
    const auto r = conjugated_pauli(u.matrix(), p);
    for (std::size_t k = 0; k < 4; ++k)
      if (r[k] != 0.0) out.add(replace_factor(t, q, kAll[k], t.coefficient() * r[k]));
  }
  return out.canonical();
}

OperatorSum gate_hamiltonian(int n_qubits, const SingleQubitUnitary& u, int i, int j, double omega) {
  if (i < 0 || j < 0 || i >= n_qubits || j >= n_qubits) throw InvalidArgument("gate Hamiltonian qubit out of range");
  if (i == j) throw InvalidArgument("gate Hamiltonian needs distinct qubits");
  if (!(omega > 0.0) || !std::isfinite(omega)) throw InvalidArgument("omega must be positive");
  OperatorSum h(n_qubits);
  h.add(PauliString::identity(n_qubits, -omega));
  h.add(PauliString(n_qubits, -omega, {{i, Pauli::X}, {j, Pauli::X}}));
  h.add(PauliString(n_qubits, omega, {{i, Pauli::Y}, {j, Pauli::Y}}));
  h.add(PauliString(n_qubits, -omega, {{i, Pauli::Z}, {j, Pauli::Z}}));
  return conjugate_operator(h, u, j);
}

OperatorSum controlled(const OperatorSum& h, int control, int value) {
  if (control < 0 || control >= h.n_qubits()) throw InvalidArgument("control qubit out of range");
  if (value != 0 && value != 1) throw InvalidArgument("control value must be 0 or 1");
  const double sign = value == 0 ? 0.5 : -0.5;
  OperatorSum out(h.n_qubits());
  for (const auto& t : h.terms()) {
    if (t.at(control) != Pauli::I) throw InvalidArgument("controlled operator already acts on the control");
    out.add(t.with_coefficient(0.5 * t.coefficient()));
    out.add(replace_factor(t, control, Pauli::Z, sign * t.coefficient()));
  }
  return out.canonical();
}

OperatorSum control_block(const OperatorSum& h, int control, int value) {
  const int n = h.n_qubits();
  if (n < 2) throw InvalidArgument("control block needs at least two qubits");
  if (control < 0 || control >= n) throw InvalidArgument("control qubit out of range");
  if (value != 0 && value != 1) throw InvalidArgument("control value must be 0 or 1");
  OperatorSum out(n - 1);
  for (const auto& t : h.terms()) {
    const Pauli p = t.at(control);
    if (p == Pauli::X || p == Pauli::Y) throw InvalidArgument("operator mixes control blocks");
    double c = t.coefficient();
    if (p == Pauli::Z && value == 1) c = -c;
    std::vector<PauliFactor> f;
    for (const auto& x : t.factors()) {
      if (x.qubit == control) continue;
      f.push_back({x.qubit > control ? x.qubit - 1 : x.qubit, x.op});
    }
    out.add(PauliString(n - 1, c, std::move(f)));
  }
  return out.canonical();
}

PauliString pauli_product(int n_qubits, Pauli op, const std::vector<int>& qubits) {
  std::vector<PauliFactor> f;
  for (int q : qubits) f.push_back({q, op});
  return PauliString(n_qubits, 1.0, std::move(f));
}

}  // namespace pagt
