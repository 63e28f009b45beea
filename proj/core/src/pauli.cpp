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

#include "pagt/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "pagt/errors.hpp"

namespace pagt {

namespace {

constexpr Complex kPowI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_qubits(int n) {
  if (n < 1 || n > 62) throw InvalidArgument("qubit count must be in [1, 62]");
}

}  // namespace

char pauli_char(Pauli p) {
  static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
  return kChars[static_cast<int>(p)];
}

Matrix2 pauli_matrix(Pauli p) {
  Matrix2 m;
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, -kI, kI, 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

PauliString::PauliString(int n_qubits, double coefficient, std::vector<PauliFactor> factors)
    : n_qubits_(n_qubits), coefficient_(coefficient) {
  check_qubits(n_qubits);
  if (!std::isfinite(coefficient)) throw InvalidArgument("Pauli coefficient must be finite");
  std::sort(factors.begin(), factors.end(),
            [](const PauliFactor& a, const PauliFactor& b) { return a.qubit < b.qubit; });
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const auto& f = factors[k];
    if (f.qubit < 0 || f.qubit >= n_qubits) throw InvalidArgument("Pauli factor qubit out of range");
    if (k > 0 && factors[k - 1].qubit == f.qubit)
      throw InvalidArgument("duplicate qubit " + std::to_string(f.qubit) + " in Pauli string");
    if (f.op == Pauli::I) continue;
    factors_.push_back(f);
    const Index bit = Index{1} << (n_qubits - 1 - f.qubit);
    if (f.op == Pauli::X || f.op == Pauli::Y) x_mask_ |= bit;
    if (f.op == Pauli::Z || f.op == Pauli::Y) z_mask_ |= bit;
    if (f.op == Pauli::Y) ++y_count_;
  }
}

Pauli PauliString::at(int qubit) const {
  for (const auto& f : factors_)
    if (f.qubit == qubit) return f.op;
  return Pauli::I;
}

PauliString PauliString::with_coefficient(double c) const {
  PauliString p = *this;
  p.coefficient_ = c;
  return p;
}

std::pair<Index, Complex> PauliString::apply_to_basis(Index x) const {
  Complex phase = kPowI[y_count_ & 3];
  if (std::popcount(x & z_mask_) & 1) phase = -phase;
  return {x ^ x_mask_, phase};
}

std::string PauliString::label() const {
  if (factors_.empty()) return "I";
  std::ostringstream os;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (k) os << ' ';
    os << pauli_char(factors_[k].op) << factors_[k].qubit;
  }
  return os.str();
}

OperatorSum::OperatorSum(int n_qubits) : n_qubits_(n_qubits) { check_qubits(n_qubits); }

OperatorSum::OperatorSum(int n_qubits, std::vector<PauliString> terms) : OperatorSum(n_qubits) {
  for (const auto& t : terms) add(t);
}

void OperatorSum::check_register(const PauliString& term) const {
  if (term.n_qubits() != n_qubits_) throw InvalidArgument("Pauli string register size mismatch");
}

OperatorSum& OperatorSum::add(const PauliString& term) {
  check_register(term);
  for (auto& t : terms_) {
    if (t.same_operator(term)) {
      t = t.with_coefficient(t.coefficient() + term.coefficient());
      return *this;
    }
  }
  terms_.push_back(term);
  return *this;
}

OperatorSum& OperatorSum::operator+=(const OperatorSum& other) {
  if (other.n_qubits_ != n_qubits_) throw InvalidArgument("operator register size mismatch");
  for (const auto& t : other.terms_) add(t);
  return *this;
}

OperatorSum& OperatorSum::operator-=(const OperatorSum& other) {
  if (other.n_qubits_ != n_qubits_) throw InvalidArgument("operator register size mismatch");
  for (const auto& t : other.terms_) add(t.with_coefficient(-t.coefficient()));
  return *this;
}

OperatorSum& OperatorSum::operator*=(double scale) {
  for (auto& t : terms_) t = t.with_coefficient(t.coefficient() * scale);
  return *this;
}

OperatorSum OperatorSum::canonical(double tol) const {
  OperatorSum out(n_qubits_);
  for (const auto& t : terms_) out.add(t);
  std::erase_if(out.terms_, [tol](const PauliString& t) { return std::abs(t.coefficient()) <= tol; });
  std::sort(out.terms_.begin(), out.terms_.end(), [](const PauliString& a, const PauliString& b) {
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    if (fa.size() != fb.size()) return fa.size() < fb.size();
    for (std::size_t k = 0; k < fa.size(); ++k) {
      if (fa[k].qubit != fb[k].qubit) return fa[k].qubit < fb[k].qubit;
      if (fa[k].op != fb[k].op) return fa[k].op < fb[k].op;
    }
    return false;
  });
  return out;
}

double OperatorSum::coefficient_of(const PauliString& p) const {
  double c = 0.0;
  for (const auto& t : terms_)
    if (t.same_operator(p)) c += t.coefficient();
  return c;
}

ComplexMatrix OperatorSum::to_dense(Index cap) const {
  const Index dim = dimension();
  if (dim > cap)
    throw InvalidArgument("dense materialization of dimension " + std::to_string(dim) +
                          " exceeds cap " + std::to_string(cap));
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const auto& t : terms_) {
    for (Index x = 0; x < dim; ++x) {
      auto [y, phase] = t.apply_to_basis(x);
      m(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) += t.coefficient() * phase;
    }
  }
  return m;
}

std::vector<Eigen::Triplet<Complex>> OperatorSum::to_coo() const {
  std::vector<Eigen::Triplet<Complex>> trip;
  const Index dim = dimension();
  trip.reserve(terms_.size() * dim);
  for (const auto& t : terms_) {
    for (Index x = 0; x < dim; ++x) {
      auto [y, phase] = t.apply_to_basis(x);
      trip.emplace_back(static_cast<int>(y), static_cast<int>(x), t.coefficient() * phase);
    }
  }
  return trip;
}

ComplexSparse OperatorSum::to_sparse() const {
  const auto dim = static_cast<Eigen::Index>(dimension());
  ComplexSparse m(dim, dim);
  auto trip = to_coo();
  m.setFromTriplets(trip.begin(), trip.end());
  m.prune(Complex(0.0, 0.0), 0.0);
  return m;
}

void OperatorSum::apply_add(const ComplexVector& x, ComplexVector& y, Complex scale) const {
  const Index dim = dimension();
  if (static_cast<Index>(x.size()) != dim || static_cast<Index>(y.size()) != dim)
    throw InvalidArgument("vector length does not match operator dimension");
  for (const auto& t : terms_) {
    const Complex c = scale * t.coefficient();
    const Complex base = kPowI[t.y_count() & 3] * c;
    const Index xm = t.x_mask();
    const Index zm = t.z_mask();
    for (Index b = 0; b < dim; ++b) {
      const Complex v = x[static_cast<Eigen::Index>(b)];
      y[static_cast<Eigen::Index>(b ^ xm)] += (std::popcount(b & zm) & 1) ? -base * v : base * v;
    }
  }
}

ComplexVector OperatorSum::apply(const ComplexVector& x) const {
  ComplexVector y = ComplexVector::Zero(x.size());
  apply_add(x, y, 1.0);
  return y;
}

double OperatorSum::expectation(const ComplexVector& x) const { return x.dot(apply(x)).real(); }

double OperatorSum::coefficient_norm() const {
  double s = 0.0;
  for (const auto& t : terms_) s += std::abs(t.coefficient());
  return s;
}

OperatorSum OperatorSum::from_dense(const ComplexMatrix& m, double tol) {
  const auto dim = static_cast<Index>(m.rows());
  if (m.rows() != m.cols() || dim < 2 || !std::has_single_bit(dim))
    throw InvalidArgument("from_dense expects a square 2^n matrix");
  const int n = std::countr_zero(dim);
  if (n > 8) throw InvalidArgument("from_dense is limited to 8 qubits");
  OperatorSum out(n);
  const Index count = Index{1} << (2 * n);
  for (Index code = 0; code < count; ++code) {
    std::vector<PauliFactor> factors;
    for (int q = 0; q < n; ++q) {
      const auto p = static_cast<Pauli>((code >> (2 * (n - 1 - q))) & 3);
      if (p != Pauli::I) factors.push_back({q, p});
    }
    PauliString p(n, 1.0, factors);
    // tr(P M) = sum_y phase(y) M(y, y ^ xmask)
    Complex tr = 0.0;
    for (Index y = 0; y < dim; ++y) {
      auto [x, phase] = p.apply_to_basis(y);
      tr += phase * m(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x));
    }
    tr /= static_cast<double>(dim);
    if (std::abs(tr.imag()) > std::max(tol, 1e-10))
      throw InvalidArgument("matrix is not Hermitian: complex Pauli coefficient for " + p.label());
    if (std::abs(tr.real()) > tol) out.add(p.with_coefficient(tr.real()));
  }
  return out;
}

std::string OperatorSum::to_string() const {
  std::ostringstream os;
  os.precision(12);
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    os << t.coefficient() << '*' << t.label();
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

OperatorSum operator+(OperatorSum a, const OperatorSum& b) { return a += b; }
OperatorSum operator-(OperatorSum a, const OperatorSum& b) { return a -= b; }
OperatorSum operator*(double s, OperatorSum a) { return a *= s; }
OperatorSum operator*(OperatorSum a, double s) { return a *= s; }

}  // namespace pagt
