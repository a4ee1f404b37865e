// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "qce/state.hpp"
#include "qce/trotter.hpp"

namespace qce {

/// A target operator written as sum_l alpha_l U_l with alpha_l >= 0 and each
/// U_l a signed Pauli string (phase in {1, i, -1, -i}).
struct LCUDecomposition {
  int n_qubits = 0;
  std::vector<double> alphas;
  std::vector<PauliString> unitaries;

  static LCUDecomposition from_pauli_sum(const PauliSum& a);
  PauliSum to_pauli_sum() const;

  double alpha() const;
  int n_ancilla() const;  // ceil(log2 L)
  std::size_t size() const { return alphas.size(); }

  /// Whether the encoded operator is unitary (checked densely).
  bool encoded_operator_is_unitary(double tol = 1e-10) const;
  /// Whether every U_l squares to +1 (real signs), as the walk needs.
  bool self_inverse_terms() const;
};

/// Joint system+ancilla state after prepare, select, unprepare (ancillae are
/// the high qubits, still unmeasured).
StateVector lcu_block_state(const LCUDecomposition& x, const StateVector& psi);

struct LCUApplyResult {
  StateVector state{0};          // system register after post-selection
  double success_probability = 0.0;  // ||X psi||^2 / alpha^2
};

/// Applies X/||X psi|| by post-selecting the ancillae on 0.
LCUApplyResult lcu_apply(const LCUDecomposition& x, const StateVector& psi);

struct OaaReport {
  double p0 = 0.0;             // bare LCU success probability
  std::vector<double> pk;      // after k = 1..k_max reflection rounds
  bool amplified = false;      // false when the encoded operator is not unitary
};

/// Oblivious amplitude amplification: applies (-W R W^dag R)^k W and records
/// the ancilla-0 probability p_k, which follows sin^2((2k+1) arcsin sqrt(p))
/// when the encoded operator is unitary. Non-unitary encodings are reported
/// unamplified (the reflections then build Chebyshev polynomials instead).
OaaReport oaa_amplify(const LCUDecomposition& x, const StateVector& psi, int k_max);

/// Truncated-Taylor evolution: per segment, the LCU of
/// sum_{m<=K} (-i dt)^m / m! H^m is applied with ancilla post-selection.
/// Segments are sized so alpha * dt <= ln 2. The recorded a-priori bound is
/// r (dt ||H||)^{K+1} / (K+1)!.
EvolutionReport taylor_evolve(const PauliSum& h, const StateVector& psi0, double t,
                              int order_k, int segments = 0);

struct QubiterateReport {
  Matrix walk;                     // dense W_Q on ancilla + system
  double block_error = 0.0;        // || <g|W_Q|g> - H/alpha ||_max
  // worst distance of +-arccos(lambda) from the walk spectrum, over
  // eigenvalues far enough from +-1 for the phase scale to be conditioned
  double phase_match_error = 0.0;
  // worst |cos(walk phase) - lambda| over the invariant subspaces; the
  // well-conditioned form of the same statement
  double cos_match_error = 0.0;
  std::vector<double> lambdas;          // eigenvalues of H/alpha
  std::vector<double> subspace_phases;  // eigenphases on the invariant subspaces
};

/// Builds the prepare/select walk W_Q = (2|g><g| - 1) select and verifies its
/// spectral structure: the <g|.|g> block is H/alpha and each eigenvalue
/// lambda of H/alpha contributes eigenphases +-arccos(lambda).
QubiterateReport build_qubiterate(const LCUDecomposition& x);

}  // namespace qce
