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

// Hand-derived final states of every scheme, written out pair by pair.
// Labels are one-based; controlled schemes put the control at index 0 and
// label k at index k, plain schemes put label k at index k - 1.
#pragma once

#include "oracle.hpp"

namespace oracle {

/// Plain teleportation variants. `pairs` lists the final |I>>-type pairs
/// with the unitary acting on the second member.
struct PlainTarget {
  int n;
  std::vector<std::pair<std::pair<int, int>, M2>> pairs;
  int out;
  Vec out_state;
  Vec build() const {
    std::vector<std::pair<std::vector<int>, Vec>> parts;
    for (const auto& [ab, u] : pairs) parts.push_back({{ab.first - 1, ab.second - 1}, pair_state(u)});
    parts.push_back({{out - 1}, out_state});
    return embed_state(n, parts);
  }
};

inline Vec at_target(const Vec& phi) { return PlainTarget{3, {{{1, 2}, I2()}}, 3, phi}.build(); }
inline Vec agt_target(const M2& u, const Vec& phi) { return PlainTarget{3, {{{1, 2}, I2()}}, 3, u * phi}.build(); }
inline Vec trans_target(const M2& u, const Vec& phi) {
  return PlainTarget{3, {{{1, 3}, I2()}}, 2, u.transpose() * phi}.build();
}
inline Vec conj_target(const M2& u, const Vec& phi) {
  return PlainTarget{3, {{{1, 2}, u}}, 3, u.conjugate() * phi}.build();
}
// U on qubit 1 of the (1,2) pair: (U x I)|I>> = (I x U^T)|I>>.
inline Vec dagger_target(const M2& u, const Vec& phi) {
  return PlainTarget{3, {{{1, 2}, u.transpose()}}, 3, u.adjoint() * phi}.build();
}

inline Vec pagt_target(const std::vector<M2>& us, const Vec& phi) {
  const int L = static_cast<int>(us.size());
  PlainTarget t{2 * L + 1, {}, 2 * L + 1, phi};
  for (int j = 1; j <= L; ++j) {
    t.pairs.push_back({{2 * j - 1, 2 * j}, I2()});
    t.out_state = us[static_cast<std::size_t>(j - 1)] * t.out_state;
  }
  return t.build();
}

/// Two-qubit-gate reordering with pairs (1,4), (2,5): output U1 U2 phi on 3.
inline Vec reordered_target(const M2& u1, const M2& u2, const Vec& phi) {
  return PlainTarget{5, {{{1, 4}, I2()}, {{2, 5}, I2()}}, 3, u1 * u2 * phi}.build();
}

/// (C, out) register in c0 |0> v0 + c1 |1> v1.
inline Vec controlled_pair(const Vec& ctrl, const Vec& v0, const Vec& v1) {
  Vec out = Vec::Zero(4);
  out.head(2) = ctrl(0) * v0;
  out.tail(2) = ctrl(1) * v1;
  return out;
}

inline Vec qswitch_target(const M2& f, const M2& g, const Vec& ctrl, const Vec& phi0, const Vec& phi1) {
  return embed_state(6, {{{0, 5}, controlled_pair(ctrl, g * f * phi0, f * g * phi1)},
                         {{1, 2}, mes()},
                         {{3, 4}, mes()}});
}

inline Vec ortho_target(const M2& o, const Vec& ctrl, const Vec& phi0, const Vec& phi1) {
  return embed_state(6, {{{0, 5}, controlled_pair(ctrl, phi0, o * phi1)}, {{1, 3}, mes()}, {{2, 4}, mes()}});
}

inline Vec ut_udag_target(const M2& u, const Vec& ctrl, const Vec& phi0, const Vec& phi1) {
  return embed_state(6, {{{0, 3}, controlled_pair(ctrl, phi0, u.transpose() * u.adjoint() * phi1)},
                         {{4, 1}, pair_state(u)},
                         {{2, 5}, mes()}});
}

}  // namespace oracle
