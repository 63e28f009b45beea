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

#include "pagt/sector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "pagt/errors.hpp"

namespace pagt {

Index SectorBasis::position(Index state) const {
  auto it = std::lower_bound(states.begin(), states.end(), state);
  if (it == states.end() || *it != state) return dimension();
  return static_cast<Index>(it - states.begin());
}

SectorBasis sector_basis(int n_qubits, int twice_k) {
  if (n_qubits < 1 || n_qubits > 30) throw InvalidArgument("sector qubit count must be in [1, 30]");
  if (std::abs(twice_k) > n_qubits || (n_qubits - twice_k) % 2 != 0)
    throw InvalidArgument("no sector with 2k = " + std::to_string(twice_k) + " on " +
                          std::to_string(n_qubits) + " qubits");
  const int ones = (n_qubits - twice_k) / 2;
  SectorBasis b{n_qubits, twice_k, {}};
  const Index dim = Index{1} << n_qubits;
  for (Index x = 0; x < dim; ++x)
    if (std::popcount(x) == ones) b.states.push_back(x);
  return b;
}

std::vector<SectorBasis> sector_decompose(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 30) throw InvalidArgument("sector qubit count must be in [1, 30]");
  std::vector<SectorBasis> out(static_cast<std::size_t>(n_qubits + 1));
  for (int ones = 0; ones <= n_qubits; ++ones) {
    auto& b = out[static_cast<std::size_t>(n_qubits - ones)];
    b.n_qubits = n_qubits;
    b.twice_k = n_qubits - 2 * ones;
  }
  const Index dim = Index{1} << n_qubits;
  for (Index x = 0; x < dim; ++x)
    out[static_cast<std::size_t>(n_qubits - std::popcount(x))].states.push_back(x);
  return out;
}

namespace {

struct Column {
  std::vector<std::pair<Index, Complex>> entries;

  void merge() {
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t w = 0;
    for (std::size_t r = 0; r < entries.size(); ++r) {
      if (w > 0 && entries[w - 1].first == entries[r].first)
        entries[w - 1].second += entries[r].second;
      else
        entries[w++] = entries[r];
    }
    entries.resize(w);
  }
};

Column column_of(const OperatorSum& h, Index x) {
  Column c;
  c.entries.reserve(h.terms().size());
  for (const auto& t : h.terms()) {
    auto [y, phase] = t.apply_to_basis(x);
    c.entries.emplace_back(y, t.coefficient() * phase);
  }
  c.merge();
  return c;
}

void check_register(const OperatorSum& h, const SectorBasis& sector) {
  if (h.n_qubits() != sector.n_qubits) throw InvalidArgument("sector and operator registers differ");
}

}  // namespace

RealSparse restrict_to_sector(const OperatorSum& h, const SectorBasis& sector, double tol) {
  check_register(h, sector);
  const auto dim = static_cast<Eigen::Index>(sector.dimension());
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(sector.states.size() * (h.terms().size() / 2 + 1));
  for (Eigen::Index col = 0; col < dim; ++col) {
    const Column c = column_of(h, sector.states[static_cast<std::size_t>(col)]);
    for (const auto& [y, v] : c.entries) {
      if (std::abs(v) <= tol) continue;
      const Index row = sector.position(y);
      if (row == sector.dimension())
        throw InvalidArgument("operator couples sector 2k=" + std::to_string(sector.twice_k) + " to its complement");
      if (std::abs(v.imag()) > tol) throw InvalidArgument("operator has complex entries inside the sector");
      trip.emplace_back(static_cast<int>(row), static_cast<int>(col), v.real());
    }
  }
  RealSparse m(dim, dim);
  m.setFromTriplets(trip.begin(), trip.end());
  return m;
}

double sector_leakage_norm(const OperatorSum& h, const SectorBasis& sector) {
  check_register(h, sector);
  double sum = 0.0;
  for (Index x : sector.states) {
    const Column c = column_of(h, x);
    for (const auto& [y, v] : c.entries)
      if (sector.position(y) == sector.dimension()) sum += std::norm(v);
  }
  return std::sqrt(sum);
}

}  // namespace pagt
