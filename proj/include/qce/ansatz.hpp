// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "qce/circuit.hpp"
#include "qce/state.hpp"

namespace qce {

enum class AnsatzKind { hardware_efficient, uccsd, adaptive };

/// A parameterized state-preparation template. Parameters bind in first-use
/// order; prepare() runs the bound circuit on |0...0>.
struct Ansatz {
  AnsatzKind kind = AnsatzKind::hardware_efficient;
  Circuit circuit;

  std::size_t parameter_count() const { return circuit.parameter_count(); }
  std::vector<std::string> parameter_names() const { return circuit.parameters(); }

  StateVector prepare(const std::vector<double>& theta) const;
};

/// Alternating layers of Ry/Rz pairs and a CNOT chain on a line.
Ansatz hardware_efficient_ansatz(int n_qubits, int layers);

/// Factorized unitary coupled-cluster with singles and doubles on a JW
/// blocked-spin register: X gates prepare the reference occupation, each
/// excitation parameter expands into commuting Pauli rotations (2 per single,
/// 8 per double).
Ansatz uccsd_ansatz(int n_modes, std::uint64_t reference_occupation);

/// Anti-Hermitian generators (t - t^dag images under JW) of the same singles
/// and doubles, for gradient-based operator selection.
std::vector<PauliSum> uccsd_operator_pool(int n_modes,
                                          std::uint64_t reference_occupation);

/// Appends exp(theta * G) for an anti-Hermitian G = i * (real Pauli sum),
/// one rotation per term, as a named parameter.
void append_pool_rotation(Circuit& c, const PauliSum& generator,
                          const std::string& param_name);

/// argmax_i |<psi| [H, A_i] |psi>| and all the gradient values.
std::pair<std::size_t, std::vector<double>> adapt_select(
    const std::vector<PauliSum>& pool, const PauliSum& h, const StateVector& psi);

}  // namespace qce
