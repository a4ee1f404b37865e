// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qce/dense.hpp"
#include "qce/pauli.hpp"

namespace qce {

enum class GateKind {
  X, Y, Z, Had, S, Sdg, T,
  Rx, Ry, Rz,
  CNOT, Swap, ControlledU,
  PauliRotation,
};

std::string gate_kind_name(GateKind k);
GateKind gate_kind_from_name(const std::string& name);

/// One circuit element. Rotation angles are in radians; S and T are the exact
/// diag(1, i) and diag(1, exp(i pi/4)) matrices, not their Rz equivalents, so
/// global phases survive (Hadamard tests depend on them).
struct Gate {
  GateKind kind;
  std::vector<int> targets;        // ControlledU: low-to-high significance
  std::vector<int> controls;       // CNOT: exactly one; ControlledU: any number
  double angle = 0.0;              // Rx/Ry/Rz/PauliRotation
  PauliString pauli;               // PauliRotation payload
  Matrix matrix;                   // ControlledU payload (2^k x 2^k)
  std::string param;               // symbolic parameter name; empty = bound
  double param_mult = 1.0;         // bound angle = param_mult * parameter value

  static Gate single(GateKind kind, int qubit, double angle = 0.0);
  static Gate cnot(int control, int target);
  static Gate swap(int a, int b);
  static Gate controlled_u(std::vector<int> controls, std::vector<int> targets,
                           Matrix u);
  static Gate pauli_rotation(const PauliString& p, double angle);
  /// Rotation whose angle is param_mult * (value bound to param).
  static Gate pauli_rotation_param(const PauliString& p, std::string param,
                                   double param_mult);

  bool is_parametric() const { return !param.empty(); }
  /// Dense matrix on the target qubits only (controls not included).
  Matrix target_matrix() const;
};

/// An ordered gate list on a fixed register, with named symbolic parameters.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int n_qubits) : n_(n_qubits) {}

  int n_qubits() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::vector<Gate>& gates() { return gates_; }

  void add(Gate g);
  Circuit& operator<<(Gate g) { add(std::move(g)); return *this; }
  void append(const Circuit& other);

  /// Parameter names in first-use order.
  std::vector<std::string> parameters() const;
  std::size_t parameter_count() const { return parameters().size(); }

  /// Circuit with every parametric angle bound; throws if a name is missing.
  Circuit bind(const std::map<std::string, double>& values) const;
  /// Binds parameters in first-use order.
  Circuit bind(const std::vector<double>& values) const;

  int width() const { return n_; }
  /// Number of layers of gates that cannot execute simultaneously.
  int depth() const;

  /// Dense unitary of the whole (bound) circuit; oracle-sized registers only.
  Matrix to_dense(int dense_cap = kDenseCap) const;

  /// Adjoint circuit (reversed order, inverted gates).
  Circuit inverse() const;

 private:
  int n_ = 0;
  std::vector<Gate> gates_;
};

/// Dense unitary of one gate embedded in the full register.
Matrix expand_gate(const Gate& g, int n_qubits);

}  // namespace qce
