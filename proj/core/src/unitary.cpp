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

#include "pagt/unitary.hpp"

#include <cctype>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "pagt/errors.hpp"

namespace pagt {

double unitarity_defect(const Matrix2& m) {
  return (m.adjoint() * m - Matrix2::Identity()).cwiseAbs().maxCoeff();
}

SingleQubitUnitary::SingleQubitUnitary(const Matrix2& m, double tol) : m_(m) {
  if (!m.allFinite()) throw InvalidArgument("unitary has non-finite entries");
  const double d = unitarity_defect(m);
  if (d > tol) throw InvalidArgument("matrix is not unitary (defect " + std::to_string(d) + ")");
}

SingleQubitUnitary SingleQubitUnitary::identity() { return SingleQubitUnitary(Matrix2::Identity()); }

SingleQubitUnitary SingleQubitUnitary::pauli_x() {
  Matrix2 m;
  m << 0, 1, 1, 0;
  return SingleQubitUnitary(m);
}

SingleQubitUnitary SingleQubitUnitary::pauli_y() {
  Matrix2 m;
  m << 0, -kI, kI, 0;
  return SingleQubitUnitary(m);
}

SingleQubitUnitary SingleQubitUnitary::pauli_z() {
  Matrix2 m;
  m << 1, 0, 0, -1;
  return SingleQubitUnitary(m);
}

SingleQubitUnitary SingleQubitUnitary::hadamard() {
  Matrix2 m;
  m << 1, 1, 1, -1;
  return SingleQubitUnitary(m / std::numbers::sqrt2);
}

SingleQubitUnitary SingleQubitUnitary::phase_s() {
  Matrix2 m;
  m << 1, 0, 0, kI;
  return SingleQubitUnitary(m);
}

SingleQubitUnitary SingleQubitUnitary::phase_t() {
  Matrix2 m;
  m << 1, 0, 0, std::polar(1.0, std::numbers::pi / 4);
  return SingleQubitUnitary(m);
}

SingleQubitUnitary SingleQubitUnitary::rz(double theta) {
  Matrix2 m;
  m << std::polar(1.0, -theta / 2), 0, 0, std::polar(1.0, theta / 2);
  return SingleQubitUnitary(m);
}

SingleQubitUnitary SingleQubitUnitary::ry(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Matrix2 m;
  m << c, -s, s, c;
  return SingleQubitUnitary(m);
}

SingleQubitUnitary SingleQubitUnitary::rotation(double theta) { return ry(2 * theta); }

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  return out;
}

bool parse_call(const std::string& s, const std::string& head, double& arg) {
  if (s.size() < head.size() + 3 || s.compare(0, head.size() + 1, head + "(") != 0 || s.back() != ')')
    return false;
  const std::string inner = s.substr(head.size() + 1, s.size() - head.size() - 2);
  std::size_t used = 0;
  try {
    arg = std::stod(inner, &used);
  } catch (const std::exception&) {
    throw InvalidArgument("cannot parse angle in '" + s + "'");
  }
  if (used != inner.size() || !std::isfinite(arg)) throw InvalidArgument("cannot parse angle in '" + s + "'");
  return true;
}

}  // namespace

SingleQubitUnitary SingleQubitUnitary::named(const std::string& raw) {
  const std::string s = strip(raw);
  if (s == "I") return identity();
  if (s == "X") return pauli_x();
  if (s == "Y") return pauli_y();
  if (s == "Z") return pauli_z();
  if (s == "H") return hadamard();
  if (s == "S") return phase_s();
  if (s == "T") return phase_t();
  double theta = 0.0;
  if (parse_call(s, "Rz", theta)) return rz(theta);
  if (parse_call(s, "Ry", theta)) return ry(theta);
  if (parse_call(s, "R", theta)) return rotation(theta);
  throw InvalidArgument("unknown unitary name '" + raw + "'");
}

SingleQubitUnitary SingleQubitUnitary::transpose() const { return SingleQubitUnitary(m_.transpose()); }
SingleQubitUnitary SingleQubitUnitary::conjugate() const { return SingleQubitUnitary(m_.conjugate()); }
SingleQubitUnitary SingleQubitUnitary::adjoint() const { return SingleQubitUnitary(m_.adjoint()); }

SingleQubitUnitary SingleQubitUnitary::operator*(const SingleQubitUnitary& rhs) const {
  return SingleQubitUnitary(m_ * rhs.m_);
}

SingleQubitUnitary SingleQubitUnitary::principal_sqrt() const {
  // Unitaries are normal, so the Schur form is diagonal up to rounding.
  Eigen::ComplexSchur<Matrix2> schur(m_);
  const Matrix2& Q = schur.matrixU();
  Matrix2 T = schur.matrixT();
  Matrix2 D = Matrix2::Zero();
  for (int k = 0; k < 2; ++k) {
    Complex lam = T(k, k);
    // Put eigenvalues sitting on the cut onto the upper side so that
    // sqrt(-1) = +i consistently.
    if (std::abs(lam.imag()) < 1e-14 && lam.real() < 0) lam = Complex(lam.real(), 0.0);
    D(k, k) = std::sqrt(lam);
  }
  return SingleQubitUnitary(Q * D * Q.adjoint(), 1e-8);
}

bool SingleQubitUnitary::is_real_orthogonal(double tol) const {
  return m_.imag().cwiseAbs().maxCoeff() <= tol &&
         (m_.real().transpose() * m_.real() - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() <= tol;
}

bool SingleQubitUnitary::approx_equal(const SingleQubitUnitary& other, double tol) const {
  return (m_ - other.m_).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace pagt
