// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#include "qce/vqe.hpp"

#include <bit>
#include <cmath>

namespace qce {

double measure_energy_grouped(const PauliSum& h, const StateVector& psi,
                              std::uint64_t shots_per_group, std::uint64_t seed) {
  if (shots_per_group == 0) throw ArgumentError("shot count must be positive");
  const int n = h.n_qubits();
  double energy = 0.0;
  const auto groups = group_commuting(h, /*qubitwise=*/true);
  std::uint64_t stream = 0;
  for (const auto& group : groups) {
    // shared per-qubit basis: any non-identity letter fixes the axis
    PauliString merged(n);
    {
      std::uint64_t x = 0, z = 0;
      for (const auto& [p, c] : group) {
        x |= p.x_mask();
        z |= p.z_mask();
      }
      merged = PauliString(n, x, z);
    }
    bool all_identity = true;
    for (const auto& [p, c] : group) {
      if (!p.is_identity()) all_identity = false;
    }
    if (all_identity) {
      for (const auto& [p, c] : group) energy += c.real();
      continue;
    }

    StateVector rotated = psi;
    Circuit v(n);
    append_basis_change(v, merged);
    rotated.apply(v);
    const auto samples =
        rotated.sample_bitstrings(shots_per_group, seed + 1315423911ULL * ++stream);
    for (const auto& [p, c] : group) {
      if (p.is_identity()) {
        energy += c.real();
        continue;
      }
      const std::uint64_t support = p.x_mask() | p.z_mask();
      double sum = 0.0;
      for (std::uint64_t zbits : samples) {
        sum += (std::popcount(zbits & support) & 1) ? -1.0 : 1.0;
      }
      energy += c.real() * sum / static_cast<double>(shots_per_group);
    }
  }
  return energy;
}

std::vector<double> vqe_gradient(const PauliSum& h, const Ansatz& ansatz,
                                 const std::vector<double>& theta) {
  const auto names = ansatz.parameter_names();
  if (names.size() != theta.size()) throw ArgumentError("parameter count mismatch");
  std::vector<double> grad(theta.size(), 0.0);

  // parameter shift per occurrence: d<H>/d(angle) = [E(+pi/2) - E(-pi/2)] / 2
  const Circuit bound = ansatz.circuit.bind(theta);
  for (std::size_t g = 0; g < ansatz.circuit.gates().size(); ++g) {
    const Gate& templ = ansatz.circuit.gates()[g];
    if (!templ.is_parametric()) continue;
    std::size_t param_index = 0;
    while (names[param_index] != templ.param) ++param_index;

    double e_shift[2];
    for (int s = 0; s < 2; ++s) {
      Circuit shifted = bound;
      shifted.gates()[g].angle += s == 0 ? 1.5707963267948966 : -1.5707963267948966;
      StateVector psi(ansatz.circuit.n_qubits());
      psi.apply(shifted);
      e_shift[s] = psi.expectation(h).real();
    }
    grad[param_index] += templ.param_mult * (e_shift[0] - e_shift[1]) / 2.0;
  }
  return grad;
}

VqeResult vqe_minimize(const PauliSum& h, const Ansatz& ansatz,
                       const VqeOptions& options) {
  if (ansatz.circuit.n_qubits() != h.n_qubits()) {
    throw DimensionError("ansatz register does not match the Hamiltonian");
  }
  const std::size_t n_params = ansatz.parameter_count();
  std::vector<double> x0 = options.initial_parameters;
  if (x0.empty()) x0.assign(n_params, 0.0);
  if (x0.size() != n_params) throw ArgumentError("initial parameter count mismatch");

  std::uint64_t eval_counter = 0;
  Objective f;
  if (options.mode == EnergyMode::exact) {
    f = [&](const std::vector<double>& theta) {
      return ansatz.prepare(theta).expectation(h).real();
    };
  } else {
    f = [&](const std::vector<double>& theta) {
      return measure_energy_grouped(h, ansatz.prepare(theta),
                                    options.shots_per_group,
                                    options.seed + 0x9e3779b9ULL * ++eval_counter);
    };
  }
  Gradient grad = [&](const std::vector<double>& theta) {
    return vqe_gradient(h, ansatz, theta);
  };

  OptimizerConfig cfg = options.optimizer;
  cfg.seed = options.seed;
  const OptimizeResult res = minimize(f, grad, std::move(x0), cfg);

  VqeResult out;
  out.parameters = res.best_params;
  out.iterations = res.iterations;
  out.diverged = res.diverged;
  out.trace = res.trace;
  out.mode = options.mode;
  out.seed = options.seed;
  if (options.mode == EnergyMode::exact) {
    out.energy = ansatz.prepare(out.parameters).expectation(h).real();
  } else {
    out.energy = measure_energy_grouped(h, ansatz.prepare(out.parameters),
                                        options.shots_per_group, options.seed);
  }
  return out;
}

}  // namespace qce
