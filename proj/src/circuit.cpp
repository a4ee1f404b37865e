// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#include "qce/circuit.hpp"

#include <algorithm>
#include <set>

namespace qce {

std::string gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::Had: return "h";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::T: return "t";
    case GateKind::Rx: return "rx";
    case GateKind::Ry: return "ry";
    case GateKind::Rz: return "rz";
    case GateKind::CNOT: return "cnot";
    case GateKind::Swap: return "swap";
    case GateKind::ControlledU: return "cu";
    case GateKind::PauliRotation: return "pauli_rot";
  }
  return "?";
}

GateKind gate_kind_from_name(const std::string& name) {
  static const std::map<std::string, GateKind> table = {
      {"x", GateKind::X}, {"y", GateKind::Y}, {"z", GateKind::Z},
      {"h", GateKind::Had}, {"s", GateKind::S}, {"sdg", GateKind::Sdg},
      {"t", GateKind::T}, {"rx", GateKind::Rx}, {"ry", GateKind::Ry},
      {"rz", GateKind::Rz}, {"cnot", GateKind::CNOT}, {"swap", GateKind::Swap},
      {"cu", GateKind::ControlledU}, {"pauli_rot", GateKind::PauliRotation}};
  auto it = table.find(name);
  if (it == table.end()) throw ParseError("unknown gate kind '" + name + "'");
  return it->second;
}

Gate Gate::single(GateKind kind, int qubit, double angle) {
  Gate g;
  g.kind = kind;
  g.targets = {qubit};
  g.angle = angle;
  return g;
}

Gate Gate::cnot(int control, int target) {
  if (control == target) throw ArgumentError("CNOT control equals target");
  Gate g;
  g.kind = GateKind::CNOT;
  g.targets = {target};
  g.controls = {control};
  return g;
}

Gate Gate::swap(int a, int b) {
  if (a == b) throw ArgumentError("SWAP qubits must differ");
  Gate g;
  g.kind = GateKind::Swap;
  g.targets = {a, b};
  return g;
}

Gate Gate::controlled_u(std::vector<int> controls, std::vector<int> targets,
                        Matrix u) {
  const auto k = targets.size();
  if (u.rows() != (1LL << k) || u.cols() != (1LL << k)) {
    throw ArgumentError("controlled-U matrix size mismatch");
  }
  std::set<int> seen(targets.begin(), targets.end());
  for (int c : controls) {
    if (!seen.insert(c).second) throw ArgumentError("controlled-U control overlaps target");
  }
  if (seen.size() != controls.size() + targets.size()) {
    throw ArgumentError("controlled-U qubits must be distinct");
  }
  Gate g;
  g.kind = GateKind::ControlledU;
  g.targets = std::move(targets);
  g.controls = std::move(controls);
  g.matrix = std::move(u);
  return g;
}

Gate Gate::pauli_rotation(const PauliString& p, double angle) {
  Gate g;
  g.kind = GateKind::PauliRotation;
  g.pauli = p;
  g.angle = angle;
  return g;
}

Gate Gate::pauli_rotation_param(const PauliString& p, std::string param,
                                double param_mult) {
  Gate g;
  g.kind = GateKind::PauliRotation;
  g.pauli = p;
  g.param = std::move(param);
  g.param_mult = param_mult;
  return g;
}

Matrix Gate::target_matrix() const {
  switch (kind) {
    case GateKind::X: return mats::x();
    case GateKind::Y: return mats::y();
    case GateKind::Z: return mats::z();
    case GateKind::Had: return mats::hadamard();
    case GateKind::S: return mats::s();
    case GateKind::Sdg: return mats::sdg();
    case GateKind::T: return mats::t();
    case GateKind::Rx: return mats::rx(angle);
    case GateKind::Ry: return mats::ry(angle);
    case GateKind::Rz: return mats::rz(angle);
    case GateKind::CNOT: return mats::x();
    case GateKind::Swap: {
      Matrix m = Matrix::Zero(4, 4);
      m(0, 0) = m(3, 3) = 1;
      m(1, 2) = m(2, 1) = 1;
      return m;
    }
    case GateKind::ControlledU: return matrix;
    case GateKind::PauliRotation: {
      // exp(-i angle/2 P) = cos I - i sin P
      const Matrix p = qce::to_dense(pauli);
      const double c = std::cos(angle / 2), s = std::sin(angle / 2);
      return c * Matrix::Identity(p.rows(), p.cols()) + cplx(0, -s) * p;
    }
  }
  throw ArgumentError("unreachable gate kind");
}

void Circuit::add(Gate g) {
  auto check = [&](int q) {
    if (q < 0 || q >= n_) throw DimensionError("gate qubit index out of range");
  };
  if (g.kind == GateKind::PauliRotation) {
    if (g.pauli.n_qubits() != n_) throw DimensionError("pauli rotation size mismatch");
  } else {
    for (int q : g.targets) check(q);
  }
  for (int q : g.controls) check(q);
  gates_.push_back(std::move(g));
}

void Circuit::append(const Circuit& other) {
  if (other.n_ != n_) throw DimensionError("circuit size mismatch");
  for (const auto& g : other.gates_) gates_.push_back(g);
}

std::vector<std::string> Circuit::parameters() const {
  std::vector<std::string> names;
  for (const auto& g : gates_) {
    if (g.is_parametric() &&
        std::find(names.begin(), names.end(), g.param) == names.end()) {
      names.push_back(g.param);
    }
  }
  return names;
}

Circuit Circuit::bind(const std::map<std::string, double>& values) const {
  Circuit out(n_);
  for (const auto& g : gates_) {
    Gate b = g;
    if (g.is_parametric()) {
      auto it = values.find(g.param);
      if (it == values.end()) throw ArgumentError("unbound parameter '" + g.param + "'");
      b.angle = g.param_mult * it->second;
      b.param.clear();
      b.param_mult = 1.0;
    }
    out.gates_.push_back(std::move(b));
  }
  return out;
}

Circuit Circuit::bind(const std::vector<double>& values) const {
  const auto names = parameters();
  if (names.size() != values.size()) throw ArgumentError("parameter count mismatch");
  std::map<std::string, double> m;
  for (std::size_t i = 0; i < names.size(); ++i) m[names[i]] = values[i];
  return bind(m);
}

int Circuit::depth() const {
  std::vector<int> level(n_, 0);
  int depth = 0;
  for (const auto& g : gates_) {
    std::vector<int> qubits = g.controls;
    if (g.kind == GateKind::PauliRotation) {
      for (int q = 0; q < n_; ++q) {
        if (g.pauli.letter(q) != 'I') qubits.push_back(q);
      }
    } else {
      qubits.insert(qubits.end(), g.targets.begin(), g.targets.end());
    }
    int l = 0;
    for (int q : qubits) l = std::max(l, level[q]);
    for (int q : qubits) level[q] = l + 1;
    depth = std::max(depth, l + 1);
  }
  return depth;
}

Matrix expand_gate(const Gate& g, int n_qubits) {
  if (n_qubits > kDenseCap) throw ResourceError("circuit dense expansion exceeds cap");
  const std::int64_t dim = 1LL << n_qubits;
  if (g.kind == GateKind::PauliRotation) {
    Gate b = g;
    b.pauli = g.pauli;
    const Matrix p = qce::to_dense(g.pauli);
    const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
    return c * Matrix::Identity(dim, dim) + cplx(0, -s) * p;
  }
  const Matrix u = g.target_matrix();
  const int k = static_cast<int>(g.targets.size());
  const std::int64_t sub = 1LL << k;
  std::uint64_t cmask = 0;
  for (int c : g.controls) cmask |= 1ULL << c;
  Matrix full = Matrix::Identity(dim, dim);
  std::uint64_t tmask = 0;
  for (int t : g.targets) tmask |= 1ULL << t;
  for (std::int64_t base = 0; base < dim; ++base) {
    if (static_cast<std::uint64_t>(base) & tmask) continue;
    if ((static_cast<std::uint64_t>(base) & cmask) != cmask) continue;
    std::vector<std::int64_t> idx(sub);
    for (std::int64_t j = 0; j < sub; ++j) {
      std::int64_t id = base;
      for (int b = 0; b < k; ++b) {
        if ((j >> b) & 1) id |= 1LL << g.targets[b];
      }
      idx[j] = id;
    }
    for (std::int64_t r = 0; r < sub; ++r) {
      for (std::int64_t c = 0; c < sub; ++c) full(idx[r], idx[c]) = u(r, c);
    }
  }
  return full;
}

Matrix Circuit::to_dense(int dense_cap) const {
  if (n_ > dense_cap) throw ResourceError("circuit dense expansion exceeds cap");
  const std::int64_t dim = 1LL << n_;
  Matrix u = Matrix::Identity(dim, dim);
  for (const auto& g : gates_) {
    if (g.is_parametric()) throw ArgumentError("cannot densify an unbound circuit");
    u = expand_gate(g, n_) * u;
  }
  return u;
}

Circuit Circuit::inverse() const {
  Circuit out(n_);
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    Gate g = *it;
    if (g.is_parametric()) throw ArgumentError("cannot invert an unbound circuit");
    switch (g.kind) {
      case GateKind::X: case GateKind::Y: case GateKind::Z:
      case GateKind::Had: case GateKind::CNOT: case GateKind::Swap:
        break;
      case GateKind::S: g.kind = GateKind::Sdg; break;
      case GateKind::Sdg: g.kind = GateKind::S; break;
      case GateKind::T:
        g.kind = GateKind::ControlledU;
        g.matrix = mats::t().adjoint();
        break;
      case GateKind::Rx: case GateKind::Ry: case GateKind::Rz:
      case GateKind::PauliRotation:
        g.angle = -g.angle;
        break;
      case GateKind::ControlledU:
        g.matrix = Matrix(g.matrix.adjoint());
        break;
    }
    out.gates_.push_back(std::move(g));
  }
  return out;
}

}  // namespace qce
