// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#include "qce/dense.hpp"

#include <bit>
#include <cmath>

namespace qce {

namespace {

void check_cap(int n, int cap) {
  if (n > cap) {
    throw ResourceError("dense representation of " + std::to_string(n) +
                        " qubits exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

Matrix to_dense(const PauliString& p, int dense_cap) {
  check_cap(p.n_qubits(), dense_cap);
  const std::int64_t dim = 1LL << p.n_qubits();
  Matrix m = Matrix::Zero(dim, dim);
  const std::uint64_t x = p.x_mask(), z = p.z_mask();
  // sigma(x,z)|b> = i^{x.z} (-1)^{z.b} |b ^ x>
  static constexpr cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const cplx base = p.phase() * ipow[std::popcount(x & z) % 4];
  for (std::int64_t b = 0; b < dim; ++b) {
    const double sign = (std::popcount(z & static_cast<std::uint64_t>(b)) & 1) ? -1.0 : 1.0;
    m(static_cast<std::int64_t>(b ^ static_cast<std::int64_t>(x)), b) = base * sign;
  }
  return m;
}

Matrix to_dense(const PauliSum& a, int dense_cap) {
  check_cap(a.n_qubits(), dense_cap);
  const std::int64_t dim = 1LL << a.n_qubits();
  Matrix m = Matrix::Zero(dim, dim);
  static constexpr cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const auto& [p, c] : a.terms()) {
    const std::uint64_t x = p.x_mask(), z = p.z_mask();
    const cplx base = c * ipow[std::popcount(x & z) % 4];
    for (std::int64_t b = 0; b < dim; ++b) {
      const double sign = (std::popcount(z & static_cast<std::uint64_t>(b)) & 1) ? -1.0 : 1.0;
      m(static_cast<std::int64_t>(b ^ static_cast<std::int64_t>(x)), b) += base * sign;
    }
  }
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix expm_hermitian(const Matrix& h, cplx scale) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const Eigen::VectorXd& vals = es.eigenvalues();
  Vector phases(vals.size());
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    phases(i) = std::exp(scale * vals(i));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

double spectral_norm(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

std::vector<double> eigenvalues_hermitian(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  std::vector<double> vals(es.eigenvalues().data(),
                           es.eigenvalues().data() + es.eigenvalues().size());
  return vals;
}

std::pair<double, Vector> ground_state(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  return {es.eigenvalues()(0), es.eigenvectors().col(0)};
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m.adjoint() * m - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() < tol;
}

namespace mats {

Matrix identity2() { return Matrix::Identity(2, 2); }

Matrix x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix y() {
  Matrix m(2, 2);
  m << cplx(0, 0), cplx(0, -1), cplx(0, 1), cplx(0, 0);
  return m;
}

Matrix z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Matrix hadamard() {
  Matrix m(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  m << r, r, r, -r;
  return m;
}

Matrix s() {
  Matrix m(2, 2);
  m << 1, 0, 0, cplx(0, 1);
  return m;
}

Matrix sdg() {
  Matrix m(2, 2);
  m << 1, 0, 0, cplx(0, -1);
  return m;
}

Matrix t() {
  Matrix m(2, 2);
  m << 1, 0, 0, std::exp(cplx(0, 0.7853981633974483));
  return m;
}

Matrix rx(double theta) {
  Matrix m(2, 2);
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  m << cplx(c, 0), cplx(0, -s), cplx(0, -s), cplx(c, 0);
  return m;
}

Matrix ry(double theta) {
  Matrix m(2, 2);
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  m << c, -s, s, c;
  return m;
}

Matrix rz(double theta) {
  Matrix m(2, 2);
  m << std::exp(cplx(0, -theta / 2)), 0, 0, std::exp(cplx(0, theta / 2));
  return m;
}

}  // namespace mats

}  // namespace qce
