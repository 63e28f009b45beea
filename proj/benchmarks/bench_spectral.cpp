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

#include <benchmark/benchmark.h>

#include "pagt/eigensolver.hpp"
#include "pagt/sector.hpp"
#include "pagt/spectral.hpp"

namespace {

// Two lowest levels of the k=1/2 block at s=1/2, forced through Lanczos.
void BM_SectorLanczos(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const auto sector = pagt::sector_basis(2 * L + 1, 1);
  const pagt::RealSparse m = pagt::restrict_to_sector(pagt::spin_chain_hamiltonian(L, 0.5, 0.5), sector);
  pagt::EigensolverPolicy policy;
  policy.dense_max_dim = 0;
  for (auto _ : state) benchmark::DoNotOptimize(pagt::lowest_eigenvalues(m, 2, policy));
  state.counters["dim"] = static_cast<double>(sector.dimension());
}
BENCHMARK(BM_SectorLanczos)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_SectorRestriction(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const auto sector = pagt::sector_basis(2 * L + 1, 1);
  const auto h = pagt::spin_chain_hamiltonian(L, 0.5, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(pagt::restrict_to_sector(h, sector));
}
BENCHMARK(BM_SectorRestriction)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_OperatorApply(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const auto h = pagt::spin_chain_hamiltonian(L, 0.5, 0.3);
  const pagt::ComplexVector x = pagt::ComplexVector::Random(static_cast<Eigen::Index>(h.dimension())).normalized();
  for (auto _ : state) benchmark::DoNotOptimize(h.apply(x));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(h.dimension() * h.terms().size()));
}
BENCHMARK(BM_OperatorApply)->DenseRange(3, 7, 2)->Unit(benchmark::kMicrosecond);

void BM_GapProfile(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const auto grid = pagt::uniform_grid(0.05);
  for (auto _ : state) benchmark::DoNotOptimize(pagt::gap_profile(L, 0.5, grid));
}
BENCHMARK(BM_GapProfile)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

}  // namespace
