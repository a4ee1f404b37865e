// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "qce/circuit.hpp"
#include "qce/state.hpp"

namespace qce {

/// Memory-bound cap on density-matrix width.
inline constexpr int kDensityCap = 12;

/// A Kraus channel acting on a set of target qubits. Matrices are
/// 2^k x 2^k over the listed targets; completeness sum K^dag K = 1 is
/// checked at construction.
struct KrausChannel {
  std::vector<int> targets;
  std::vector<Matrix> operators;

  KrausChannel(std::vector<int> targets, std::vector<Matrix> operators);
};

namespace channels {
/// rho -> (1-p) rho + p I/2 on one qubit.
KrausChannel depolarizing(int qubit, double p);
KrausChannel amplitude_damping(int qubit, double gamma);
KrausChannel phase_damping(int qubit, double gamma);
}  // namespace channels

/// Dense 2^n x 2^n state, stored as vec(rho) so the state-vector kernels do
/// double duty: column index bits live in the high half, rows in the low half.
class DensityMatrix {
 public:
  explicit DensityMatrix(int n_qubits, std::uint64_t basis_state = 0);

  static DensityMatrix from_state(const StateVector& s);
  static DensityMatrix from_matrix(int n_qubits, const Matrix& rho);

  int n_qubits() const { return n_; }
  std::int64_t dim() const { return 1LL << n_; }

  kern::Backend backend() const { return backend_; }
  void set_backend(kern::Backend b) { backend_ = b; }

  /// rho -> G rho G^dag.
  void apply(const Gate& g);
  void apply(const Circuit& c);

  /// rho -> sum_m K_m rho K_m^dag.
  void apply_channel(const KrausChannel& ch);

  cplx trace() const;
  double purity() const;
  cplx expectation(const PauliString& p) const;
  cplx expectation(const PauliSum& a) const;

  /// Diagonal of rho: outcome distribution over computational basis states.
  std::vector<double> probabilities() const;

  std::vector<std::uint64_t> sample_bitstrings(std::uint64_t n_s,
                                               std::uint64_t seed) const;

  Matrix to_matrix() const;

  /// Max deviation from Hermiticity, for invariant checks.
  double hermiticity_error() const;

 private:
  void check_qubit(int q) const {
    if (q < 0 || q >= n_) throw DimensionError("qubit index out of range");
  }
  void apply_one_side(const Gate& g, int shift, bool conjugate);

  int n_;
  std::vector<cplx> vec_;  // vec(rho), size 4^n
  kern::Backend backend_;
};

}  // namespace qce
