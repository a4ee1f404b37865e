// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#include "qce/ansatz.hpp"

#include <cmath>

#include "qce/fermion.hpp"

namespace qce {

StateVector Ansatz::prepare(const std::vector<double>& theta) const {
  StateVector s(circuit.n_qubits());
  s.apply(circuit.bind(theta));
  return s;
}

Ansatz hardware_efficient_ansatz(int n_qubits, int layers) {
  if (layers < 1) throw ArgumentError("layer count must be positive");
  Ansatz a;
  a.kind = AnsatzKind::hardware_efficient;
  a.circuit = Circuit(n_qubits);
  int p = 0;
  auto param = [&]() { return "t" + std::to_string(p++); };
  for (int l = 0; l < layers; ++l) {
    for (int q = 0; q < n_qubits; ++q) {
      Gate ry = Gate::single(GateKind::Ry, q);
      ry.param = param();
      a.circuit.add(ry);
      Gate rz = Gate::single(GateKind::Rz, q);
      rz.param = param();
      a.circuit.add(rz);
    }
    for (int q = 0; q + 1 < n_qubits; ++q) a.circuit.add(Gate::cnot(q, q + 1));
  }
  // a final rotation layer so the last entangler is not wasted
  for (int q = 0; q < n_qubits; ++q) {
    Gate ry = Gate::single(GateKind::Ry, q);
    ry.param = param();
    a.circuit.add(ry);
  }
  return a;
}

namespace {

struct Excitations {
  // singles as (i, a); doubles as (i, j, a, b) with i<j occupied, a<b virtual
  std::vector<std::array<int, 2>> singles;
  std::vector<std::array<int, 4>> doubles;
};

Excitations enumerate_excitations(int n_modes, std::uint64_t reference) {
  if (n_modes % 2 != 0) throw ArgumentError("spin-orbital count must be even");
  const int half = n_modes / 2;
  auto spin = [&](int mode) { return mode < half ? 0 : 1; };
  std::vector<int> occ, vir;
  for (int m = 0; m < n_modes; ++m) {
    if ((reference >> m) & 1) occ.push_back(m);
    else vir.push_back(m);
  }
  Excitations ex;
  for (int i : occ) {
    for (int a : vir) {
      if (spin(i) == spin(a)) ex.singles.push_back({i, a});
    }
  }
  for (std::size_t i = 0; i < occ.size(); ++i) {
    for (std::size_t j = i + 1; j < occ.size(); ++j) {
      for (std::size_t a = 0; a < vir.size(); ++a) {
        for (std::size_t b = a + 1; b < vir.size(); ++b) {
          const int si = spin(occ[i]) + spin(occ[j]);
          const int sa = spin(vir[a]) + spin(vir[b]);
          if (si == sa) ex.doubles.push_back({occ[i], occ[j], vir[a], vir[b]});
        }
      }
    }
  }
  return ex;
}

PauliSum single_generator(int n_modes, int i, int a) {
  FermionOperator g(n_modes);
  g.add_term({{a, true}, {i, false}}, 1.0);
  g.add_term({{i, true}, {a, false}}, -1.0);
  return jordan_wigner(g);
}

PauliSum double_generator(int n_modes, int i, int j, int a, int b) {
  FermionOperator g(n_modes);
  g.add_term({{a, true}, {b, true}, {j, false}, {i, false}}, 1.0);
  g.add_term({{i, true}, {j, true}, {b, false}, {a, false}}, -1.0);
  return jordan_wigner(g);
}

}  // namespace

void append_pool_rotation(Circuit& c, const PauliSum& generator,
                          const std::string& param_name) {
  for (const auto& [p, coeff] : generator.terms()) {
    if (std::abs(coeff.real()) > 1e-12) {
      throw ArgumentError("pool generator must be anti-Hermitian");
    }
    // exp(theta * i b P) = R_P(-2 b theta)
    c.add(Gate::pauli_rotation_param(p, param_name, -2.0 * coeff.imag()));
  }
}

Ansatz uccsd_ansatz(int n_modes, std::uint64_t reference_occupation) {
  Ansatz a;
  a.kind = AnsatzKind::uccsd;
  a.circuit = Circuit(n_modes);
  for (int m = 0; m < n_modes; ++m) {
    if ((reference_occupation >> m) & 1) a.circuit.add(Gate::single(GateKind::X, m));
  }
  const auto ex = enumerate_excitations(n_modes, reference_occupation);
  int p = 0;
  for (const auto& [i, aa] : ex.singles) {
    append_pool_rotation(a.circuit, single_generator(n_modes, i, aa),
                         "s" + std::to_string(p++));
  }
  p = 0;
  for (const auto& [i, j, aa, bb] : ex.doubles) {
    append_pool_rotation(a.circuit, double_generator(n_modes, i, j, aa, bb),
                         "d" + std::to_string(p++));
  }
  return a;
}

std::vector<PauliSum> uccsd_operator_pool(int n_modes,
                                          std::uint64_t reference_occupation) {
  const auto ex = enumerate_excitations(n_modes, reference_occupation);
  std::vector<PauliSum> pool;
  for (const auto& [i, a] : ex.singles) pool.push_back(single_generator(n_modes, i, a));
  for (const auto& [i, j, a, b] : ex.doubles) {
    pool.push_back(double_generator(n_modes, i, j, a, b));
  }
  return pool;
}

std::pair<std::size_t, std::vector<double>> adapt_select(
    const std::vector<PauliSum>& pool, const PauliSum& h, const StateVector& psi) {
  if (pool.empty()) throw ArgumentError("operator pool is empty");
  std::vector<double> gradients;
  gradients.reserve(pool.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const PauliSum comm = commutator(h, pool[i]);
    const double g = psi.expectation(comm).real();
    gradients.push_back(g);
    if (std::abs(g) > std::abs(gradients[best])) best = i;
  }
  return {best, gradients};
}

}  // namespace qce
