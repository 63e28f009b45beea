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

#include "pagt/spectral.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <optional>
#include <thread>

#include "pagt/errors.hpp"
#include "pagt/gate_hamiltonian.hpp"

namespace pagt {

namespace {

void check_L(int L) {
  if (L < 1 || L > 14) throw InvalidArgument("L must be in [1, 14]");
}

void check_omega(double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw InvalidArgument("omega must be positive");
}

OperatorSum heisenberg_bond(int n, int a, int b, double weight) {
  OperatorSum h(n);
  for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) h.add(PauliString(n, weight, {{a, p}, {b, p}}));
  return h;
}

OperatorSum drop_identity(const OperatorSum& h) {
  OperatorSum out(h.n_qubits());
  for (const auto& t : h.terms())
    if (!t.is_identity()) out.add(t);
  return out.canonical();
}

bool same_operator(const OperatorSum& a, const OperatorSum& b, double tol = 1e-12) {
  if (a.n_qubits() != b.n_qubits()) return false;
  const OperatorSum d = (a - b).canonical(tol);
  return d.empty();
}

}  // namespace

HamiltonianPair pagt_identity_pair(int L, double omega) {
  check_L(L);
  check_omega(omega);
  const int n = 2 * L + 1;
  const auto id = SingleQubitUnitary::identity();
  HamiltonianPair p{OperatorSum(n), OperatorSum(n)};
  for (int j = 1; j <= L; ++j) {
    p.initial += gate_hamiltonian(n, id, 2 * j - 1, 2 * j, omega);
    p.final += gate_hamiltonian(n, id, 2 * j - 2, 2 * j - 1, omega);
  }
  p.initial = p.initial.canonical();
  p.final = p.final.canonical();
  return p;
}

HamiltonianPair to_spin_chain(const HamiltonianPair& pair) {
  const int n = pair.initial.n_qubits();
  if (n != pair.final.n_qubits() || n % 2 == 0 || n < 3)
    throw InvalidArgument("spin-chain mapping needs a PAGT pair on 2L+1 qubits");
  const int L = (n - 1) / 2;
  // the identity coefficient of the initial Hamiltonian is -omega L
  const double omega = -pair.initial.coefficient_of(PauliString::identity(n)) / L;
  if (!(omega > 0.0)) throw InvalidArgument("input is not an identity-gate PAGT pair");
  const HamiltonianPair ref = pagt_identity_pair(L, omega);
  if (!same_operator(ref.initial, pair.initial) || !same_operator(ref.final, pair.final))
    throw InvalidArgument("input is not an identity-gate PAGT pair");
  const auto y = SingleQubitUnitary::pauli_y();
  HamiltonianPair out = pair;
  for (int q = 1; q < n; q += 2) {
    out.initial = conjugate_operator(out.initial, y, q);
    out.final = conjugate_operator(out.final, y, q);
  }
  out.initial = drop_identity(out.initial);
  out.final = drop_identity(out.final);
  return out;
}

OperatorSum spin_chain_hamiltonian(int L, double omega, double s) {
  check_L(L);
  check_omega(omega);
  const int n = 2 * L + 1;
  OperatorSum h(n);
  for (int b = 0; b + 1 < n; ++b) {
    const double w = omega * ((b % 2 == 1) ? 1.0 - s : s);
    if (w != 0.0) h += heisenberg_bond(n, b, b + 1, w);
  }
  return h.canonical();
}

std::vector<double> uniform_grid(double step) {
  if (!(step > 0.0) || step > 1.0) throw InvalidArgument("grid step must be in (0, 1]");
  const double nf = 1.0 / step;
  const long n = std::lround(nf);
  if (std::abs(nf - static_cast<double>(n)) > 1e-9 * nf)
    throw InvalidArgument("grid step must divide 1 evenly");
  std::vector<double> g(static_cast<std::size_t>(n + 1));
  for (long i = 0; i <= n; ++i) g[static_cast<std::size_t>(i)] = static_cast<double>(i) / static_cast<double>(n);
  return g;
}

SpectralProfile gap_profile(int L, double omega, const std::vector<double>& s_grid, const EigensolverPolicy& policy,
                            int threads, int twice_k) {
  check_L(L);
  check_omega(omega);
  if (s_grid.empty()) throw InvalidArgument("empty s grid");
  for (double s : s_grid)
    if (!(s >= 0.0 && s <= 1.0)) throw InvalidArgument("grid points must lie in [0, 1]");
  const int n = 2 * L + 1;
  const SectorBasis sector = sector_basis(n, twice_k);
  if (sector.dimension() < 2) throw InvalidArgument("sector too small to define a gap");

  // H(s) = (1 - s) A + s B inside the sector
  OperatorSum a(n), b(n);
  for (int q = 0; q + 1 < n; ++q) (q % 2 == 1 ? a : b) += heisenberg_bond(n, q, q + 1, omega);
  const RealSparse A = restrict_to_sector(a.canonical(), sector);
  const RealSparse B = restrict_to_sector(b.canonical(), sector);

  SpectralProfile p;
  p.L = L;
  p.omega = omega;
  p.twice_k = twice_k;
  p.s_grid = s_grid;
  p.gaps.assign(s_grid.size(), NAN);
  p.ground_energies.assign(s_grid.size(), NAN);
  std::vector<std::optional<GridFailure>> fail(s_grid.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < s_grid.size(); i = next++) {
      const double s = s_grid[i];
      const RealSparse H = (1.0 - s) * A + s * B;
      try {
        const EigenResult r = lowest_eigenvalues(H, 2, policy);
        p.ground_energies[i] = r.values[0];
        p.gaps[i] = std::max(0.0, r.values[1] - r.values[0]);
      } catch (const ConvergenceError& e) {
        fail[i] = GridFailure{i, s, e.residual(), e.what()};
      }
    }
  };
  const int nt = std::max(1, std::min<int>(threads, static_cast<int>(s_grid.size())));
  if (nt == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& f : fail)
    if (f) p.failures.push_back(*f);
  return p;
}

MinGap min_gap(const SpectralProfile& profile) {
  if (profile.gaps.empty() || profile.gaps.size() != profile.s_grid.size())
    throw InvalidArgument("empty or inconsistent profile");
  MinGap best{NAN, INFINITY, 0};
  bool found = false;
  for (std::size_t i = 0; i < profile.gaps.size(); ++i) {
    const double g = profile.gaps[i];
    if (std::isnan(g)) continue;
    if (!found || g < best.gap || (g == best.gap && profile.s_grid[i] < best.s_star)) {
      best = {profile.s_grid[i], g, i};
      found = true;
    }
  }
  if (!found) throw InvalidArgument("profile has no finite gap");
  return best;
}

namespace {

double extreme_abs_eigenvalue(const LinearOperator<double>& op, Index dim, const EigensolverPolicy& policy) {
  LinearOperator<double> neg = [&op](const RealVector& x, RealVector& y) {
    op(x, y);
    y = -y;
  };
  const double lo = lanczos_lowest<double>(op, dim, 1, policy).values[0];
  const double hi = -lanczos_lowest<double>(neg, dim, 1, policy).values[0];
  return std::max(std::abs(lo), std::abs(hi));
}

}  // namespace

double spectral_norm(const OperatorSum& h, const EigensolverPolicy& policy) {
  const Index dim = h.dimension();
  if (dim <= std::max<Index>(policy.dense_max_dim, 2)) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h.to_dense(), Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
  }
  LinearOperator<Complex> op = [&h](const ComplexVector& x, ComplexVector& y) {
    y.setZero(x.size());
    h.apply_add(x, y, 1.0);
  };
  LinearOperator<Complex> neg = [&h](const ComplexVector& x, ComplexVector& y) {
    y.setZero(x.size());
    h.apply_add(x, y, -1.0);
  };
  const double lo = lanczos_lowest<Complex>(op, dim, 1, policy).values[0];
  const double hi = -lanczos_lowest<Complex>(neg, dim, 1, policy).values[0];
  return std::max(std::abs(lo), std::abs(hi));
}

double pagt_norm_difference(int L, double omega, const EigensolverPolicy& policy) {
  check_L(L);
  check_omega(omega);
  // Y-conjugation maps H_fin - H_ini to a chain difference with no shift
  const HamiltonianPair chain = to_spin_chain(pagt_identity_pair(L, omega));
  const OperatorSum diff = (chain.final - chain.initial).canonical();
  double norm = 0.0;
  for (const auto& sector : sector_decompose(diff.n_qubits())) {
    const RealSparse m = restrict_to_sector(diff, sector);
    const Index dim = sector.dimension();
    if (dim <= policy.dense_max_dim) {
      Eigen::SelfAdjointEigenSolver<RealMatrix> es(RealMatrix(m), Eigen::EigenvaluesOnly);
      norm = std::max(norm, es.eigenvalues().cwiseAbs().maxCoeff());
    } else {
      LinearOperator<double> op = [&m](const RealVector& x, RealVector& y) { y.noalias() = m * x; };
      norm = std::max(norm, extreme_abs_eigenvalue(op, dim, policy));
    }
  }
  return norm;
}

Index witness_state(int L) {
  check_L(L);
  const int n = 2 * L + 1;
  Index x = 0;
  for (int q = 0; q < n; ++q)
    if (q % 4 >= 2) x |= Index{1} << (n - 1 - q);
  return x;
}

double norm_witness(int L, double omega) {
  const HamiltonianPair p = pagt_identity_pair(L, omega);
  const OperatorSum diff = (p.final - p.initial).canonical();
  const Index x = witness_state(L);
  double v = 0.0;
  for (const auto& t : diff.terms()) {
    if (t.x_mask() != 0) continue;
    v += t.coefficient() * t.apply_to_basis(x).second.real();
  }
  return v;
}

namespace {

double trapezoid(const std::vector<double>& s, const std::vector<double>& f, std::size_t stride) {
  double sum = 0.0;
  for (std::size_t i = stride; i < s.size(); i += stride) sum += 0.5 * (f[i] + f[i - stride]) * (s[i] - s[i - stride]);
  return sum;
}

}  // namespace

TimingReport sufficient_time(const SpectralProfile& profile, double norm_diff, const AdiabaticParams& params) {
  const auto& s = profile.s_grid;
  if (s.size() < 2 || profile.gaps.size() != s.size()) throw InvalidArgument("profile grid is too short");
  if (std::abs(s.front()) > 1e-12 || std::abs(s.back() - 1.0) > 1e-12)
    throw InvalidArgument("profile must cover s in [0, 1]");
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!(s[i] > s[i - 1])) throw InvalidArgument("profile grid must be increasing");
    if (s[i] - s[i - 1] > 0.01 + 1e-12) throw InvalidArgument("profile grid spacing exceeds 0.01");
  }
  if (!profile.complete()) throw InvalidArgument("profile has failed grid points");
  if (!(params.epsilon > 0.0) || !(params.delta > 0.0) || !(params.c > 0.0))
    throw InvalidArgument("adiabatic parameters must be positive");
  std::vector<double> inv(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double g = profile.gaps[i];
    if (!(g > 1e-12)) throw ZeroGapError("gap vanishes at s=" + std::to_string(s[i]), s[i]);
    inv[i] = 1.0 / (g * g);
  }
  const MinGap mg = min_gap(profile);
  TimingReport r;
  r.L = profile.L;
  r.omega = profile.omega;
  r.G_L = mg.gap;
  r.s_star = mg.s_star;
  r.norm_diff = norm_diff;
  r.T_e = trapezoid(s, inv, 1);
  if ((s.size() - 1) % 2 == 0) {
    r.T_e_coarse = trapezoid(s, inv, 2);
    r.T_e_richardson = r.T_e + (r.T_e - r.T_e_coarse) / 3.0;
  } else {
    r.T_e_coarse = NAN;
    r.T_e_richardson = NAN;
  }
  r.T_L = norm_diff * r.T_e;
  r.linear_bound_T = params.c * std::pow(norm_diff, 1.0 + params.delta) /
                     (std::pow(params.epsilon, params.delta) * std::pow(mg.gap, 2.0 + params.delta));
  return r;
}

std::vector<AuditPoint> global_gap_audit(int L, double omega, const std::vector<double>& s_values) {
  check_L(L);
  if (2 * L + 1 > 11) throw InvalidArgument("global audit is limited to 11 qubits");
  std::vector<AuditPoint> out;
  const SpectralProfile sector = gap_profile(L, omega, s_values);
  for (std::size_t i = 0; i < s_values.size(); ++i) {
    const double s = s_values[i];
    const ComplexMatrix h = spin_chain_hamiltonian(L, omega, s).to_dense();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
    const RealVector e = es.eigenvalues();
    const double e0 = e[0];
    double first = NAN;
    for (Eigen::Index k = 1; k < e.size(); ++k) {
      if (e[k] - e0 > 1e-8) {
        first = e[k];
        break;
      }
    }
    out.push_back({s, sector.gaps[i], first - e0, e[1] - e0});
  }
  return out;
}

}  // namespace pagt
