// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "qce/circuit.hpp"
#include "qce/dense.hpp"
#include "qce/fermion.hpp"
#include "qce/integrals.hpp"

namespace qce {

/// Rank factors of the electron-repulsion tensor: (pr|qs) = sum_g L^g_pr
/// L^g_qs with each L^g an n x n real symmetric matrix.
struct LowRankFactors {
  std::vector<Eigen::MatrixXd> factors;
  double residual = 0.0;  // max diagonal residual reached

  /// Frobenius error of the reassembled tensor against the source.
  double reconstruction_error(const MolecularIntegrals& ints) const;
};

/// Pivoted Cholesky of the (pr),(qs) ERI matrix, stopping when the largest
/// diagonal residual drops below tol. Pivot = largest residual diagonal,
/// ties to the lowest index.
LowRankFactors cholesky_factorize(const MolecularIntegrals& ints, double tol = 1e-8);

/// One plane rotation: rows/columns (k, l), angle theta, complex phase on the
/// off-diagonal pair.
struct GivensRotation {
  int k, l;
  double theta;
  cplx phase;  // e^{i phi} carried by the rotation
};

/// U = [prod rotations] * diag(phases), with at most n(n-1)/2 rotations.
struct GivensNetwork {
  int n = 0;
  std::vector<GivensRotation> rotations;
  std::vector<cplx> phases;

  Matrix reconstruct() const;
};

/// QR-style decomposition of a unitary into plane rotations plus diagonal
/// phases.
GivensNetwork givens_decompose(const Matrix& u, double tol = 1e-10);

/// Diagonal one-body coefficients and orbital rotations of the factorized
/// Hamiltonian  E0 + V0^dag (sum_p t_p n_p) V0
///                 + sum_g V_g^dag (sum_pq v^g_pq n_p n_q) V_g,
/// with v^g_pq = w^g_p w^g_q / 2 from the eigendecomposition L^g = W diag(w)
/// W^T. The one-body matrix carries the reordering correction t_pr = h_pr -
/// 1/2 sum_q (pq|qr).
struct FactorizedHamiltonian {
  double e_core = 0.0;
  Eigen::MatrixXd one_body_rotation;           // eigenvectors of the corrected t
  Eigen::VectorXd one_body_levels;             // eigenvalues t_p
  std::vector<Eigen::MatrixXd> pair_rotations; // W^g per factor
  std::vector<Eigen::VectorXd> pair_levels;    // w^g per factor

  int n_spatial() const { return static_cast<int>(one_body_levels.size()); }
};

FactorizedHamiltonian factorize_hamiltonian(const MolecularIntegrals& ints,
                                            double tol = 1e-8);

/// Reassembles the factorized form as a fermionic operator (spin orbitals,
/// blocked order); spectra must match the direct construction.
FermionOperator factorized_to_fermion(const FactorizedHamiltonian& fh);

/// One first-order step exp(-i dt H) of the factorized Hamiltonian as a
/// circuit of Givens-network basis changes interleaved with Rz / Rzz gates,
/// for the JW encoding with blocked spins. Gate count O(N_g M^2).
Circuit lowrank_trotter_step(const FactorizedHamiltonian& fh, double dt);

}  // namespace qce
