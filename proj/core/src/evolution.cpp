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

#include "pagt/evolution.hpp"

#include <chrono>
#include <cmath>
#include <map>

#include <Eigen/Eigenvalues>

#include "pagt/errors.hpp"

namespace pagt {

namespace {

using Clock = std::chrono::steady_clock;

ComplexVector exp_times(const Eigen::SelfAdjointEigenSolver<ComplexMatrix>& es, const ComplexVector& psi, double dt) {
  const ComplexMatrix& V = es.eigenvectors();
  ComplexVector c = V.adjoint() * psi;
  for (Eigen::Index i = 0; i < c.size(); ++i) c[i] *= std::polar(1.0, -dt * es.eigenvalues()[i]);
  return V * c;
}

double ground_weight(const Eigen::SelfAdjointEigenSolver<ComplexMatrix>& es, const ComplexVector& psi,
                     double degeneracy) {
  const RealVector& e = es.eigenvalues();
  double w = 0.0;
  for (Eigen::Index i = 0; i < e.size() && e[i] - e[0] <= degeneracy; ++i)
    w += std::norm(es.eigenvectors().col(i).dot(psi));
  return w;
}

// exp(-i dt H) psi in a Lanczos subspace, halving dt while the a-posteriori
// error estimate exceeds tol.
ComplexVector krylov_expv(const std::function<void(const ComplexVector&, ComplexVector&)>& op,
                          const ComplexVector& psi, double dt, int m_max, double tol, int depth = 0) {
  const double beta0 = psi.norm();
  if (beta0 == 0.0) return psi;
  const Eigen::Index n = psi.size();
  const Eigen::Index m = std::min<Eigen::Index>(m_max, n);
  ComplexMatrix V(n, m + 1);
  RealVector alpha = RealVector::Zero(m), beta = RealVector::Zero(m);
  V.col(0) = psi / beta0;
  ComplexVector w(n);
  Eigen::Index k = m;
  for (Eigen::Index j = 0; j < m; ++j) {
    op(V.col(j), w);
    alpha[j] = V.col(j).dot(w).real();
    for (int pass = 0; pass < 2; ++pass) w -= V.leftCols(j + 1) * (V.leftCols(j + 1).adjoint() * w);
    beta[j] = w.norm();
    if (beta[j] < 1e-14) {
      k = j + 1;
      break;
    }
    V.col(j + 1) = w / beta[j];
  }
  RealMatrix T = RealMatrix::Zero(k, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    T(j, j) = alpha[j];
    if (j + 1 < k) T(j, j + 1) = T(j + 1, j) = beta[j];
  }
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(T);
  ComplexVector y(k);
  for (Eigen::Index i = 0; i < k; ++i) y[i] = std::polar(1.0, -dt * es.eigenvalues()[i]) * es.eigenvectors()(0, i);
  ComplexVector c = es.eigenvectors().cast<Complex>() * y;
  const double err = (k == m && k < n) ? beta[k - 1] * std::abs(c[k - 1]) : 0.0;
  if (err > tol) {
    if (depth > 30) throw ConvergenceError("Krylov exponential did not converge", err);
    const ComplexVector half = krylov_expv(op, psi, dt / 2, m_max, tol, depth + 1);
    return krylov_expv(op, half, dt / 2, m_max, tol, depth + 1);
  }
  return beta0 * (V.leftCols(k) * c);
}

// Qubits on which every term is diagonal split H(t) into independent
// blocks; each block is exponentiated exactly on its own.
class Stepper {
 public:
  Stepper(const std::vector<ScheduledTerm>& terms, const PropagatorPolicy& policy)
      : terms_(terms), policy_(policy) {
    if (terms.empty()) throw InvalidArgument("evolution needs at least one term");
    const int n = terms.front().op.n_qubits();
    for (const auto& t : terms) {
      if (t.op.n_qubits() != n) throw InvalidArgument("evolution terms act on different registers");
      if (!t.weight) throw InvalidArgument("evolution term without a weight function");
    }
    dim_ = terms.front().op.dimension();
    dense_ = dim_ <= policy.dense_max_dim;
    if (!dense_) {
      for (const auto& t : terms) sparse_ops_.push_back(t.op.to_sparse());
      return;
    }
    Index offdiag = 0;
    for (const auto& t : terms)
      for (const auto& p : t.op.terms()) offdiag |= p.x_mask();
    const Index diag_mask = (dim_ - 1) & ~offdiag;
    std::map<Index, std::vector<Eigen::Index>> groups;
    for (Index x = 0; x < dim_; ++x) groups[x & diag_mask].push_back(static_cast<Eigen::Index>(x));
    for (auto& [key, idx] : groups) blocks_.push_back(std::move(idx));
    ops_.resize(terms.size());
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const ComplexMatrix full = terms[k].op.to_dense();
      for (const auto& idx : blocks_) ops_[k].push_back(full(idx, idx));
    }
    cached_.resize(blocks_.size());
  }

  Index dimension() const { return dim_; }

  std::vector<double> weights(double t) const {
    std::vector<double> w;
    for (const auto& term : terms_) w.push_back(term.weight(t));
    return w;
  }

  // One midpoint step; `ground` receives the ground weight when requested.
  ComplexVector step(const ComplexVector& psi, double t_mid, double dt, double* ground = nullptr) {
    const auto w = weights(t_mid);
    if (dense_) {
      refresh(w);
      ComplexVector out(psi.size());
      for (std::size_t b = 0; b < blocks_.size(); ++b)
        out(blocks_[b]) = exp_times(*cached_[b], psi(blocks_[b]), dt);
      if (ground) *ground = ground_weight(out);
      return out;
    }
    auto op = [&](const ComplexVector& x, ComplexVector& y) {
      y.setZero(x.size());
      for (std::size_t k = 0; k < w.size(); ++k)
        if (w[k] != 0.0) y.noalias() += w[k] * (sparse_ops_[k] * x);
    };
    if (ground) *ground = NAN;
    return krylov_expv(op, psi, dt, policy_.krylov_dim, policy_.krylov_tol);
  }

  // Ground weight of `psi` under the Hamiltonian at time t; NaN off the dense path.
  double ground_weight_at(const ComplexVector& psi, double t) {
    if (!dense_) return NAN;
    refresh(weights(t));
    return ground_weight(psi);
  }

 private:
  void refresh(const std::vector<double>& w) {
    if (w == cached_w_ && cached_.front()) return;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      ComplexMatrix h = ComplexMatrix::Zero(ops_[0][b].rows(), ops_[0][b].cols());
      for (std::size_t k = 0; k < w.size(); ++k)
        if (w[k] != 0.0) h += w[k] * ops_[k][b];
      cached_[b].emplace(h);
    }
    cached_w_ = w;
  }

  double ground_weight(const ComplexVector& psi) const {
    double e0 = INFINITY;
    for (const auto& es : cached_) e0 = std::min(e0, es->eigenvalues()[0]);
    double weight = 0.0;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      const auto& es = *cached_[b];
      const ComplexVector part = psi(blocks_[b]);
      for (Eigen::Index i = 0; i < es.eigenvalues().size() && es.eigenvalues()[i] - e0 <= 1e-6; ++i)
        weight += std::norm(es.eigenvectors().col(i).dot(part));
    }
    return weight;
  }

  const std::vector<ScheduledTerm>& terms_;
  PropagatorPolicy policy_;
  Index dim_ = 0;
  bool dense_ = false;
  std::vector<std::vector<Eigen::Index>> blocks_;
  std::vector<std::vector<ComplexMatrix>> ops_;  // [term][block]
  std::vector<ComplexSparse> sparse_ops_;
  std::vector<std::optional<Eigen::SelfAdjointEigenSolver<ComplexMatrix>>> cached_;
  std::vector<double> cached_w_;
};

ComplexVector run(Stepper& stepper, const ComplexVector& psi0, double T, std::size_t steps,
                  const EvolveOptions* trace_opts = nullptr, std::vector<TraceRow>* trace = nullptr) {
  ComplexVector psi = psi0;
  const double dt = T / static_cast<double>(steps);
  auto row = [&](double t, double ground) {
    const double s = trace_opts->s_of_t ? trace_opts->s_of_t(t) : NAN;
    const double f = trace_opts->target ? fidelity(*trace_opts->target, psi) : NAN;
    trace->push_back({t, s, f, std::isnan(ground) ? NAN : std::max(0.0, 1.0 - ground), psi.norm()});
  };
  if (trace) row(0.0, stepper.ground_weight_at(psi, 0.0));
  for (std::size_t k = 0; k < steps; ++k) {
    const bool record = trace && ((k + 1) % trace_opts->trace_stride == 0 || k + 1 == steps);
    double ground = NAN;
    psi = stepper.step(psi, (static_cast<double>(k) + 0.5) * dt, dt, record ? &ground : nullptr);
    if (record) row(static_cast<double>(k + 1) * dt, ground);
  }
  return psi;
}

}  // namespace

ComplexVector apply_exponential(const OperatorSum& h, const ComplexVector& psi, double dt,
                                const PropagatorPolicy& policy) {
  std::vector<ScheduledTerm> terms{{h, [](double) { return 1.0; }}};
  Stepper st(terms, policy);
  if (static_cast<Index>(psi.size()) != st.dimension()) throw InvalidArgument("state does not match operator");
  return st.step(psi, 0.0, dt);
}

ComplexVector propagate_fixed(const std::vector<ScheduledTerm>& terms, const ComplexVector& psi0, double T,
                              std::size_t steps, const PropagatorPolicy& policy) {
  if (steps == 0) throw InvalidArgument("need at least one step");
  Stepper st(terms, policy);
  if (static_cast<Index>(psi0.size()) != st.dimension()) throw InvalidArgument("state does not match operator");
  return run(st, psi0, T, steps);
}

double ground_leakage(const OperatorSum& h, const ComplexVector& psi, double degeneracy) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h.to_dense());
  return std::max(0.0, 1.0 - ground_weight(es, psi, degeneracy) / psi.squaredNorm());
}

EvolutionReport evolve_multiterm(const std::vector<ScheduledTerm>& terms, const ComplexVector& psi0, double T,
                                 const EvolveOptions& options) {
  const auto start = Clock::now();
  const StepControl& c = options.control;
  if (!(c.dt_max > 0.0) || !(c.tol > 0.0) || !(c.dt_min > 0.0) || c.dt_min > c.dt_max)
    throw InvalidArgument("invalid step control");
  if (!(T >= 0.0) || !std::isfinite(T)) throw InvalidArgument("total time must be finite and non-negative");
  Stepper stepper(terms, options.propagator);
  if (static_cast<Index>(psi0.size()) != stepper.dimension()) throw InvalidArgument("state does not match operator");
  if (std::abs(psi0.norm() - 1.0) > kDefaultTolerance) throw InvalidArgument("initial state is not normalized");
  if (options.target && options.target->size() != psi0.size()) throw InvalidArgument("target does not match state");

  EvolutionReport rep;
  rep.total_time = T;
  if (T == 0.0) {
    rep.final_state = psi0;
  } else {
    auto steps = static_cast<std::size_t>(std::ceil(T / c.dt_max - 1e-12));
    steps = std::max<std::size_t>(steps, 1);
    ComplexVector prev = run(stepper, psi0, T, steps);
    for (;;) {
      if (T / static_cast<double>(2 * steps) < c.dt_min)
        throw ConvergenceError("step tolerance unreachable above dt_min", rep.last_change);
      steps *= 2;
      ++rep.refinements;
      ComplexVector next = run(stepper, psi0, T, steps);
      rep.last_change = (next - prev).norm();
      prev = std::move(next);
      if (rep.last_change < c.tol) break;
    }
    rep.final_state = std::move(prev);
    rep.steps = steps;
    rep.dt = T / static_cast<double>(steps);
  }
  if (options.trace_stride > 0) {
    if (T == 0.0) {
      const double s = options.s_of_t ? options.s_of_t(0.0) : NAN;
      const double f = options.target ? fidelity(*options.target, psi0) : NAN;
      const double g = stepper.ground_weight_at(psi0, 0.0);
      rep.trace.push_back({0.0, s, f, std::isnan(g) ? NAN : std::max(0.0, 1.0 - g), psi0.norm()});
    } else {
      run(stepper, psi0, T, rep.steps, &options, &rep.trace);
    }
  }
  rep.norm_drift = std::abs(rep.final_state.norm() - 1.0);
  if (options.target) rep.fidelity = fidelity(*options.target, rep.final_state);
  if (stepper.dimension() <= options.propagator.leakage_max_dim) {
    const auto w = stepper.weights(T);
    OperatorSum hT(terms.front().op.n_qubits());
    for (std::size_t k = 0; k < terms.size(); ++k) hT += w[k] * terms[k].op;
    rep.leakage = ground_leakage(hT.canonical(), rep.final_state);
  }
  rep.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
  return rep;
}

EvolutionReport evolve(const OperatorSum& h_ini, const OperatorSum& h_fin, const Schedule& schedule,
                       const ComplexVector& psi0, const EvolveOptions& options) {
  if (h_ini.n_qubits() != h_fin.n_qubits()) throw InvalidArgument("initial and final registers differ");
  std::vector<ScheduledTerm> terms{{h_ini, [schedule](double t) { return 1.0 - schedule(t); }},
                                   {h_fin, [schedule](double t) { return schedule(t); }}};
  EvolveOptions opts = options;
  if (!opts.s_of_t) opts.s_of_t = [schedule](double t) { return schedule(t); };
  return evolve_multiterm(terms, psi0, schedule.total_time(), opts);
}

ComplexVector extract_branch(const ComplexVector& psi, int n_qubits, int control, int value) {
  if (control < 0 || control >= n_qubits) throw InvalidArgument("control qubit out of range");
  if (value != 0 && value != 1) throw InvalidArgument("branch value must be 0 or 1");
  if (static_cast<Index>(psi.size()) != (Index{1} << n_qubits)) throw InvalidArgument("state length mismatch");
  const int low = n_qubits - 1 - control;  // bit position of the control
  const Index half = Index{1} << (n_qubits - 1);
  ComplexVector out(static_cast<Eigen::Index>(half));
  for (Index r = 0; r < half; ++r) {
    const Index hi = (r >> low) << (low + 1);
    const Index lo = r & ((Index{1} << low) - 1);
    out[static_cast<Eigen::Index>(r)] =
        psi[static_cast<Eigen::Index>(hi | (static_cast<Index>(value) << low) | lo)];
  }
  return out;
}

ComplexVector join_branches(const ComplexVector& b0, const ComplexVector& b1, int n_qubits, int control) {
  if (control < 0 || control >= n_qubits) throw InvalidArgument("control qubit out of range");
  const Index half = Index{1} << (n_qubits - 1);
  if (static_cast<Index>(b0.size()) != half || static_cast<Index>(b1.size()) != half)
    throw InvalidArgument("branch length mismatch");
  const int low = n_qubits - 1 - control;
  ComplexVector out(static_cast<Eigen::Index>(2 * half));
  for (Index r = 0; r < half; ++r) {
    const Index hi = (r >> low) << (low + 1);
    const Index lo = r & ((Index{1} << low) - 1);
    out[static_cast<Eigen::Index>(hi | lo)] = b0[static_cast<Eigen::Index>(r)];
    out[static_cast<Eigen::Index>(hi | (Index{1} << low) | lo)] = b1[static_cast<Eigen::Index>(r)];
  }
  return out;
}

BranchDecomposition branch_phase(const ComplexVector& psi, int n_qubits, int control, const ComplexVector& target0,
                                 const ComplexVector& target1) {
  const ComplexVector p0 = extract_branch(psi, n_qubits, control, 0);
  const ComplexVector p1 = extract_branch(psi, n_qubits, control, 1);
  if (target0.size() != p0.size() || target1.size() != p1.size()) throw InvalidArgument("branch target length mismatch");
  if (std::abs(target0.norm() - 1.0) > kDefaultTolerance || std::abs(target1.norm() - 1.0) > kDefaultTolerance)
    throw InvalidArgument("branch targets must be normalized");
  const Complex a = target0.dot(p0);
  const Complex b = target1.dot(p1);
  BranchDecomposition d;
  d.w0 = std::norm(a);
  d.w1 = std::norm(b);
  d.residual = std::max(0.0, psi.squaredNorm() - d.w0 - d.w1);
  d.defined = std::abs(a) >= 1e-6 && std::abs(b) >= 1e-6;
  if (d.defined) d.phase = std::arg(b / a);
  return d;
}

double reduced_purity(const ComplexVector& psi, int n_qubits, const std::vector<int>& keep) {
  if (keep.empty() || static_cast<int>(keep.size()) >= n_qubits)
    throw InvalidArgument("kept qubits must form a non-empty proper subset");
  const ComplexMatrix rho = reduced_density_matrix(psi, n_qubits, keep);
  return (rho * rho).trace().real() / std::pow(psi.squaredNorm(), 2);
}

}  // namespace pagt
