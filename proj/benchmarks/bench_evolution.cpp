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

#include "pagt/evolution.hpp"
#include "pagt/schemes.hpp"

namespace {

pagt::SchemeSetup qswitch_setup() {
  pagt::SchemeSpec spec;
  spec.scheme = pagt::SchemeId::QSWITCH;
  spec.unitaries = {pagt::SingleQubitUnitary::pauli_x(), pagt::SingleQubitUnitary::pauli_z()};
  return pagt::build_scheme(spec);
}

// A fixed-step sweep over the six-qubit switch Hamiltonian; every step has
// a fresh weight vector, so each one pays for the block eigendecompositions.
void BM_ControlledSweep(benchmark::State& state) {
  const auto st = qswitch_setup();
  const double T = 10.0;
  const std::vector<pagt::ScheduledTerm> terms{{st.h_ini(), [T](double t) { return 1 - t / T; }},
                                               {st.h_fin(), [T](double t) { return t / T; }}};
  const auto steps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pagt::propagate_fixed(terms, st.psi0, T, steps));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ControlledSweep)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_KrylovExponential(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const auto h = pagt::spin_chain_hamiltonian(L, 0.5, 0.4);
  pagt::ComplexVector psi = pagt::ComplexVector::Zero(static_cast<Eigen::Index>(h.dimension()));
  psi(3) = 1.0;
  pagt::PropagatorPolicy policy;
  policy.dense_max_dim = 0;
  for (auto _ : state) benchmark::DoNotOptimize(pagt::apply_exponential(h, psi, 0.1, policy));
}
BENCHMARK(BM_KrylovExponential)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_DenseExponential(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const auto h = pagt::spin_chain_hamiltonian(L, 0.5, 0.4);
  pagt::ComplexVector psi = pagt::ComplexVector::Zero(static_cast<Eigen::Index>(h.dimension()));
  psi(3) = 1.0;
  for (auto _ : state) benchmark::DoNotOptimize(pagt::apply_exponential(h, psi, 0.1));
}
BENCHMARK(BM_DenseExponential)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
