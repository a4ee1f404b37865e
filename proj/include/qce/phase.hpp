// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "qce/state.hpp"
#include "qce/trotter.hpp"

namespace qce {

struct QpeResult {
  std::vector<double> distribution;  // exact ancilla distribution over z
  std::uint64_t best_outcome = 0;    // mode of the sampled histogram
  double phase_estimate = 0.0;       // best_outcome / 2^t
  double p_best = 0.0;               // empirical frequency of the mode
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
};

/// Textbook phase estimation: t Hadamard ancillae, controlled powers U^{2^j},
/// inverse QFT, ancilla measurement. Non-eigenstates yield mixtures.
QpeResult qpe_unitary(const Matrix& u, const StateVector& state, int t_ancillae,
                      std::uint64_t shots, std::uint64_t seed);

struct QpeEnergyResult {
  QpeResult qpe;
  double energy = 0.0;  // estimate mapped back to Hartree
};

/// Runs QPE on exp(2 pi i (H - e_lo) / (e_hi - e_lo)) and maps the phase
/// estimate back to an energy.
QpeEnergyResult qpe_hamiltonian(const PauliSum& h, const StateVector& state,
                                int t_ancillae, double e_lo, double e_hi,
                                std::uint64_t shots, std::uint64_t seed);

/// Exact distribution |Delta(z, theta)|^2 of textbook QPE with t ancillae.
std::vector<double> qpe_reference_distribution(double theta, int t_ancillae);

struct AspResult {
  StateVector state{0};
  double overlap = 0.0;        // |<psi_T | ground of H(1)>|^2
  double min_gap = 0.0;        // smallest sampled spectral gap of H(s)
  bool gap_warning = false;    // min_gap < 1e-6
};

/// Adiabatic preparation along H(s) = h0 + s h1 with a linear schedule and
/// second-order product-formula steps at the midpoint of each interval.
/// psi0 should be the ground state of h0 (see ground_state_vector).
AspResult adiabatic_prepare(const PauliSum& h0, const PauliSum& h1,
                            const StateVector& psi0, double total_time,
                            int n_steps);

/// Dense ground state of a Pauli sum as a StateVector.
StateVector ground_state_vector(const PauliSum& h);

/// H0 for molecular adiabatic runs: the Fock-style one-body operator plus the
/// constant <HF| H - F |HF>, encoded with JW blocked spins.
PauliSum molecular_initial_hamiltonian(const MolecularIntegrals& ints);

/// Hartree-Fock determinant in JW blocked-spin ordering.
StateVector hartree_fock_state(int n_spatial, int n_electrons);

struct CorrelationResult {
  std::vector<double> times;
  std::vector<cplx> dense_path;    // e^{i E0 t} <psi| A e^{-iHt} B |psi>
  std::vector<cplx> circuit_path;  // ancilla Hadamard-test readout
  std::vector<double> omegas;      // DFT frequencies
  std::vector<double> spectral;    // |S(omega)|
};

/// C(t) = <psi0| A e^{-i (H - e0) t} B |psi0> on the supplied (uniform) time
/// grid, evaluated both by dense propagation and through the ancilla circuit,
/// plus the discrete Fourier transform S(omega). A non-uniform grid raises an
/// argument error for the transform.
CorrelationResult correlation_function(const PauliSum& h, const PauliSum& a,
                                       const PauliSum& b, const StateVector& psi0,
                                       double e0, const std::vector<double>& times);

}  // namespace qce
