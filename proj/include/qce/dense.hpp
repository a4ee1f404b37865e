// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "qce/pauli.hpp"

namespace qce {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Dense 2^n x 2^n matrix of a Pauli string, basis |z_{n-1} ... z_0> with
/// qubit 0 the least significant index bit.
Matrix to_dense(const PauliString& p, int dense_cap = kDenseCap);

/// Dense matrix of a Pauli sum.
Matrix to_dense(const PauliSum& a, int dense_cap = kDenseCap);

Matrix kron(const Matrix& a, const Matrix& b);

/// exp(scale * H) for Hermitian H, via eigendecomposition.
Matrix expm_hermitian(const Matrix& h, cplx scale);

/// Spectral norm (largest singular value).
double spectral_norm(const Matrix& m);

/// Ascending real eigenvalues of a Hermitian matrix.
std::vector<double> eigenvalues_hermitian(const Matrix& h);

/// Ground eigenpair of a Hermitian matrix.
std::pair<double, Vector> ground_state(const Matrix& h);

bool is_unitary(const Matrix& m, double tol = 1e-10);

/// 2x2 constants.
namespace mats {
Matrix identity2();
Matrix x();
Matrix y();
Matrix z();
Matrix hadamard();
Matrix s();
Matrix sdg();
Matrix t();
Matrix rx(double theta);
Matrix ry(double theta);
Matrix rz(double theta);
}  // namespace mats

}  // namespace qce
