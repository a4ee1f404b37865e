// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "qce/circuit.hpp"
#include "qce/lowrank.hpp"
#include "qce/state.hpp"

namespace qce {

/// Outcome of an evolution engine run. Bound and measured error are NaN when
/// not computed; the invariant measured <= bound + 1e-10 holds whenever both
/// are present.
struct EvolutionReport {
  StateVector state{0};
  double time = 0.0;
  int n_steps = 0;
  int order = 1;
  double apriori_bound = std::numeric_limits<double>::quiet_NaN();
  double measured_error = std::numeric_limits<double>::quiet_NaN();
  std::string term_order = "mask-sorted";
  std::uint64_t seed = 0;
};

/// a_{2k} = 1 / (4 - 4^{1/(2k+1)}) of the Suzuki recursion.
double suzuki_coefficient(int two_k);

/// One product-formula step U_order(dt) over the mask-sorted terms of H.
/// Order 1 is the primitive formula, even orders follow the recursion.
Circuit trotter_step_circuit(const PauliSum& h, double dt, int order);

/// gamma_p = 1/2 sum_{l<l'} ||[h_l, h_l']|| (spectral norms, dense).
double trotter_gamma(const std::vector<PauliSum>& groups, int dense_cap = kDenseCap);

/// First-order a-priori bound gamma_p * n_steps * dt^2.
double trotter_error_bound(const std::vector<PauliSum>& groups, double t,
                           int n_steps, int dense_cap = kDenseCap);

/// Splits H into its mask-sorted single-Pauli terms.
std::vector<PauliSum> split_terms(const PauliSum& h);

/// Applies (U_order(t/n))^n to psi0. With measure_error (dense cap allowing),
/// the spectral-norm distance to exp(-i t H) is recorded; order 1 also
/// records the gamma_p bound.
EvolutionReport trotter_evolve(const PauliSum& h, const StateVector& psi0, double t,
                               int n_steps, int order, bool measure_error = false);

/// Same contract for the factorized low-rank step (JW, blocked spins).
EvolutionReport lowrank_trotter_evolve(const FactorizedHamiltonian& fh,
                                       const StateVector& psi0, double t,
                                       int n_steps, bool measure_error = false);

/// Least-squares slope of log(err) against log(n) - the order diagnostic.
double fitted_loglog_slope(const std::vector<double>& n_values,
                           const std::vector<double>& errors);

}  // namespace qce
