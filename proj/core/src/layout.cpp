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

#include "pagt/layout.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "pagt/errors.hpp"

namespace pagt {

namespace {

StateFragment link_fragment(const PairLink& l) {
  ComplexVector v(4);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) v[2 * x + y] = l.M(x, y);
  return {{l.a, l.b}, v.normalized()};
}

std::vector<int> owner_of(int n, const std::vector<PairLink>& links, const char* what) {
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t k = 0; k < links.size(); ++k) {
    for (int q : {links[k].a, links[k].b}) {
      if (q < 0 || q >= n) throw InvalidArgument(std::string(what) + " pair qubit out of range");
      if (owner[static_cast<std::size_t>(q)] >= 0)
        throw InvalidArgument(std::string(what) + " pairs share qubit " + std::to_string(q));
      owner[static_cast<std::size_t>(q)] = static_cast<int>(k);
    }
    if (links[k].a == links[k].b) throw InvalidArgument(std::string(what) + " pair joins a qubit to itself");
  }
  return owner;
}

}  // namespace

PairLink gate_link(int a, int b, const Matrix2& u) { return {a, b, u.transpose()}; }

TeleportationFlow trace_flow(int n, int input, const std::vector<PairLink>& initial,
                             const std::vector<PairLink>& final) {
  const auto ini = owner_of(n, initial, "initial");
  const auto fin = owner_of(n, final, "final");
  if (input < 0 || input >= n) throw InvalidArgument("input qubit out of range");
  if (ini[static_cast<std::size_t>(input)] >= 0) throw InvalidArgument("input qubit belongs to an initial pair");

  TeleportationFlow f;
  f.input_qubit = input;
  f.final_links = final;
  std::vector<bool> used_ini(initial.size(), false);
  int q = input;
  f.path.push_back(q);
  for (std::size_t guard = 0; guard <= static_cast<std::size_t>(n); ++guard) {
    const int fl = fin[static_cast<std::size_t>(q)];
    if (fl < 0) {
      f.output_qubit = q;
      break;
    }
    const PairLink& F = final[static_cast<std::size_t>(fl)];
    if (q == F.a) {
      f.map = F.M.adjoint() * f.map;
      q = F.b;
    } else {
      f.map = F.M.conjugate() * f.map;
      q = F.a;
    }
    f.path.push_back(q);
    const int il = ini[static_cast<std::size_t>(q)];
    if (il < 0) throw InvalidArgument("flow stops on qubit " + std::to_string(q) + " which has no initial pair");
    const PairLink& I = initial[static_cast<std::size_t>(il)];
    used_ini[static_cast<std::size_t>(il)] = true;
    if (q == I.a) {
      f.map = I.M.transpose() * f.map;
      q = I.b;
    } else {
      f.map = I.M * f.map;
      q = I.a;
    }
    f.path.push_back(q);
  }
  if (fin[static_cast<std::size_t>(f.output_qubit)] >= 0) throw InvalidArgument("flow does not terminate");

  // remaining initial pairs are either idle or sit on closed loops
  std::vector<StateFragment> ini_frags, fin_frags;
  std::vector<int> loop_qubits;
  for (std::size_t k = 0; k < initial.size(); ++k) {
    if (used_ini[k]) continue;
    const auto& l = initial[k];
    const bool ta = fin[static_cast<std::size_t>(l.a)] >= 0, tb = fin[static_cast<std::size_t>(l.b)] >= 0;
    if (!ta && !tb) {
      f.idle_links.push_back(l);
    } else if (ta && tb) {
      ini_frags.push_back(link_fragment(l));
      loop_qubits.push_back(l.a);
      loop_qubits.push_back(l.b);
    } else {
      throw InvalidArgument("initial pair only half covered by the final Hamiltonian");
    }
  }
  if (!ini_frags.empty()) {
    // overlap of the loop qubits' initial and final pair states
    const int m = static_cast<int>(loop_qubits.size());
    std::vector<int> local(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < m; ++i) local[static_cast<std::size_t>(loop_qubits[static_cast<std::size_t>(i)])] = i;
    auto relabel = [&](StateFragment fr) {
      for (int& q2 : fr.qubits) q2 = local[static_cast<std::size_t>(q2)];
      return fr;
    };
    std::vector<StateFragment> a, b;
    for (const auto& fr : ini_frags) a.push_back(relabel(fr));
    for (const auto& l : final) {
      if (local[static_cast<std::size_t>(l.a)] < 0 && local[static_cast<std::size_t>(l.b)] < 0) continue;
      if (local[static_cast<std::size_t>(l.a)] < 0 || local[static_cast<std::size_t>(l.b)] < 0)
        throw InvalidArgument("final pair straddles a loop and the flow path");
      b.push_back(relabel(link_fragment(l)));
    }
    f.loop_overlap = std::abs(inner(compose(m, a), compose(m, b)));
  }
  return f;
}

StateVector TeleportationFlow::state(int n, const ComplexVector& phi) const {
  if (phi.size() != 2) throw InvalidArgument("input state needs two amplitudes");
  std::vector<StateFragment> frags;
  for (const auto& l : final_links) frags.push_back(link_fragment(l));
  for (const auto& l : idle_links) frags.push_back(link_fragment(l));
  frags.push_back(single_qubit(output_qubit, (map * phi).normalized()));
  return compose(n, frags);
}

StateVector initial_state(int n, int input, const ComplexVector& phi, const std::vector<PairLink>& initial) {
  if (phi.size() != 2) throw InvalidArgument("input state needs two amplitudes");
  std::vector<StateFragment> frags;
  for (const auto& l : initial) frags.push_back(link_fragment(l));
  frags.push_back(single_qubit(input, phi.normalized()));
  return compose(n, frags);
}

}  // namespace pagt
