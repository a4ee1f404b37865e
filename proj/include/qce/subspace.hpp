// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qce/ansatz.hpp"
#include "qce/dense.hpp"
#include "qce/state.hpp"

namespace qce {

/// Overlap and Hamiltonian matrices over a labelled basis, solved by
/// canonical orthogonalization with a singular-value cutoff.
struct SubspaceProblem {
  std::vector<std::string> labels;
  Matrix s;  // overlap, Hermitian PSD
  Matrix h;  // Hamiltonian block, Hermitian
  double threshold = 1e-8;

  struct Solution {
    std::vector<double> eigenvalues;  // ascending
    Matrix coefficients;              // per retained direction
    int kept = 0;
    std::vector<double> discarded;    // singular values below threshold
  };
  Solution solve() const;
};

/// <v_a| B |v_b> by the ancilla circuit: controlled state preparations and
/// 2<S_-> = <X> + i<Y> readout. Exact expectations; with shots > 0 each
/// ancilla observable is sampled.
cplx hadamard_test(const Circuit& prepare_a, const Circuit& prepare_b,
                   const PauliSum& b, std::uint64_t shots = 0,
                   std::uint64_t seed = 0);

/// Subspace problem over {E_a |psi0>} for a set of excitation operators.
SubspaceProblem qse_problem(const PauliSum& h, const StateVector& psi0,
                            const std::vector<PauliSum>& excitations,
                            double threshold = 1e-8);

/// All Pauli strings of weight at most k (the P_k basis), identity included.
std::vector<PauliSum> pauli_excitation_basis(int n_qubits, int max_weight);

/// JW images of fermionic excitations of rank at most k from a reference
/// occupation (identity included; k in {1, 2}).
std::vector<PauliSum> fermionic_excitation_basis(int n_modes,
                                                 std::uint64_t reference,
                                                 int max_rank);

enum class PropagatorKind { dense, trotter };

/// Filter-diagonalization basis |v_k> = e^{-i k dt H} |psi0>, dense or
/// Trotterized propagation.
SubspaceProblem qfd_problem(const PauliSum& h, const StateVector& psi0, double dt,
                            int dimension, PropagatorKind kind = PropagatorKind::dense,
                            int trotter_steps_per_interval = 16,
                            double threshold = 1e-8);

/// Excitation energies from the double-commutator eigenproblem
/// M c = dE V c with M_ab = <[O_a, H, O_b^dag]>, V_ab = <[O_a, O_b^dag]>.
/// Returns the positive real eigenvalues in ascending order.
std::vector<double> qeom_excitation_energies(const PauliSum& h,
                                             const StateVector& psi0,
                                             const std::vector<PauliSum>& basis,
                                             double threshold = 1e-8);

struct QiteStepResult {
  StateVector state{0};
  std::vector<double> x;          // fitted generator coefficients
  double residual = 0.0;          // fit residual norm
  bool regularized = false;       // normal equations needed ridge help
};

/// One imaginary-time step e^{-dtau h} |psi>, approximated by the unitary
/// exp(i sum_i x_i P_i) with P_i running over the Pauli strings supported on
/// the domain qubits; x solves the least-squares match to the normalized
/// target. The unitary is applied exactly.
QiteStepResult qite_step(const PauliSum& h_term, const StateVector& psi,
                         double dtau, std::uint64_t domain_mask);

struct QiteTrajectory {
  std::vector<double> energies;  // after each step, starting with step 0
  StateVector state{0};
};

/// Repeated full-domain QITE steps under the whole Hamiltonian.
QiteTrajectory qite_evolve(const PauliSum& h, const StateVector& psi0, double dtau,
                           int n_steps);

/// Subspace problem over normalized imaginary-time states |v_k> ~
/// e^{-k dtau H} |psi0> (dense ITE, or QITE-generated states).
SubspaceProblem qlanczos_problem(const PauliSum& h, const StateVector& psi0,
                                 double dtau, int dimension, bool use_qite = false,
                                 double threshold = 1e-8);

/// McLachlan equations A dtheta = b at the given parameters:
/// A_rk = Re <d_r psi | d_k psi>, b_r = Im <d_r psi| H |psi>.
struct McLachlanSystem {
  Eigen::MatrixXd a;
  Eigen::VectorXd b;
};
McLachlanSystem mclachlan_system(const Ansatz& ansatz,
                                 const std::vector<double>& theta,
                                 const PauliSum& h);

enum class VqsIntegrator { euler, rk4 };

/// One variational-dynamics step theta -> theta + dt * A^+ b, Tikhonov
/// regularized (lambda = 1e-8). Flags stiff steps where the regularized
/// solve had to discard directions.
struct VqsStepResult {
  std::vector<double> theta;
  bool stiff = false;
};
VqsStepResult vqs_step(const Ansatz& ansatz, const std::vector<double>& theta,
                       const PauliSum& h, double dt,
                       VqsIntegrator integrator = VqsIntegrator::rk4);

}  // namespace qce
