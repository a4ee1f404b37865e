// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qce/ansatz.hpp"
#include "qce/optimize.hpp"
#include "qce/pauli.hpp"

namespace qce {

enum class EnergyMode { exact, shots };

struct VqeOptions {
  EnergyMode mode = EnergyMode::exact;
  std::uint64_t shots_per_group = 100000;
  std::uint64_t seed = 1;
  OptimizerConfig optimizer;
  std::vector<double> initial_parameters;  // zeros when empty
};

struct VqeResult {
  double energy = 0.0;
  std::vector<double> parameters;
  int iterations = 0;
  bool diverged = false;
  std::vector<double> trace;
  EnergyMode mode = EnergyMode::exact;
  std::uint64_t seed = 0;
};

/// <H> by simultaneous measurement of qubit-wise commuting groups: one basis
/// change and one shot batch per group.
double measure_energy_grouped(const PauliSum& h, const StateVector& psi,
                              std::uint64_t shots_per_group, std::uint64_t seed);

/// Exact parameter-shift gradient of <H> for rotation-gate ansaetze.
std::vector<double> vqe_gradient(const PauliSum& h, const Ansatz& ansatz,
                                 const std::vector<double>& theta);

/// Variational minimization of <H>. Exact mode respects the variational
/// bound by construction; shot mode estimates each energy by grouped
/// sampling with a per-evaluation RNG stream.
VqeResult vqe_minimize(const PauliSum& h, const Ansatz& ansatz,
                       const VqeOptions& options);

}  // namespace qce
