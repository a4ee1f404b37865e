// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qce/circuit.hpp"
#include "qce/kernels.hpp"
#include "qce/pauli.hpp"
#include "qce/rng.hpp"

namespace qce {

/// Memory-bound cap on state-vector width.
inline constexpr int kStateCap = 26;

/// Sample mean and deviation of a Pauli measurement, with the seed that
/// produced it.
struct ShotEstimate {
  double mean = 0.0;
  double sigma = 0.0;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
};

/// Which realization of exp(-i theta/2 P) to run: the sparse two-point update,
/// or the basis-change + CNOT-ladder + Rz circuit. Both must agree.
enum class RotationPath { direct, ladder };

/// Dense 2^n complex state. Unitary operations preserve the norm to 1e-10;
/// global phases are preserved throughout.
class StateVector {
 public:
  explicit StateVector(int n_qubits, std::uint64_t basis_state = 0);

  static StateVector from_amplitudes(int n_qubits, std::vector<cplx> amps);

  int n_qubits() const { return n_; }
  std::int64_t dim() const { return static_cast<std::int64_t>(amps_.size()); }
  std::span<const cplx> amplitudes() const { return amps_; }
  std::span<cplx> amplitudes() { return amps_; }
  cplx amplitude(std::uint64_t basis) const { return amps_[basis]; }

  kern::Backend backend() const { return backend_; }
  void set_backend(kern::Backend b) { backend_ = b; }

  void apply(const Gate& g);
  void apply(const Circuit& c);

  /// exp(-i theta/2 P). An identity P applies the global phase exp(-i theta/2).
  void apply_pauli_rotation(const PauliString& p, double theta,
                            RotationPath path = RotationPath::direct);

  /// State <- P state.
  void apply_pauli(const PauliString& p);

  /// In-place state <- A state (A a PauliSum); the result is generally
  /// unnormalized.
  void apply_operator(const PauliSum& a);

  double norm() const;
  void normalize();

  cplx inner(const StateVector& other) const;

  cplx expectation(const PauliString& p) const;
  cplx expectation(const PauliSum& a) const;

  std::vector<double> probabilities() const;

  /// Projects the given qubits onto the required outcomes and renormalizes.
  /// Returns the projection probability. Throws NumericalError when the
  /// probability is below 1e-14.
  double postselect(const std::vector<int>& qubits, const std::vector<int>& outcomes);

  /// Measures the Pauli string with n_s shots: basis change, bitstring
  /// sampling, mean mu = n_s^{-1} sum f(z) and sigma^2 = n_s^{-1}(1 - mu^2).
  ShotEstimate sample_pauli(const PauliString& p, std::uint64_t n_s,
                            std::uint64_t seed) const;

  /// Samples n_s computational-basis bitstrings.
  std::vector<std::uint64_t> sample_bitstrings(std::uint64_t n_s,
                                               std::uint64_t seed) const;

 private:
  void check_qubit(int q) const {
    if (q < 0 || q >= n_) throw DimensionError("qubit index out of range");
  }

  int n_;
  std::vector<cplx> amps_;
  kern::Backend backend_;
};

/// Per-qubit basis change V with V^dagger Z V = sigma: H for X, S^dagger then
/// H for Y, nothing for Z. Appends onto the circuit.
void append_basis_change(Circuit& c, const PauliString& p);

/// The basis-change + CNOT-ladder + Rz realization of exp(-i theta/2 P).
Circuit pauli_rotation_ladder(const PauliString& p, double theta);

/// Draws an index from a cumulative distribution built from probs.
std::uint64_t sample_index(const std::vector<double>& cdf, double u);

/// In-place inclusive prefix sum used for sampling.
std::vector<double> build_cdf(const std::vector<double>& probs);

}  // namespace qce
