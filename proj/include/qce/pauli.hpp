// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qce/errors.hpp"

namespace qce {

using cplx = std::complex<double>;

/// Number of qubits a single mask word can hold. Desk scale: state vectors are
/// capped well below this, so one word per mask suffices.
inline constexpr int kMaxQubits = 63;

/// Default magnitude below which PauliSum coefficients are dropped.
inline constexpr double kDefaultPruneThreshold = 1e-12;

/// Dense-representation cap for operators (2^n x 2^n matrices).
inline constexpr int kDenseCap = 12;

/// An n-qubit Pauli string stored as symplectic bit masks plus a fourth-root
/// phase. Bit l of each mask refers to qubit l (little endian; in the ket
/// |z_{n-1} ... z_0> qubit 0 is the rightmost digit). Per qubit,
/// (x, z) = (0,0) -> I, (1,0) -> X, (1,1) -> Y, (0,1) -> Z.
class PauliString {
 public:
  PauliString() = default;

  /// Identity on n qubits.
  explicit PauliString(int n_qubits) : n_(check_n(n_qubits)) {}

  PauliString(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask,
              int phase_power_of_i = 0)
      : n_(check_n(n_qubits)), x_(x_mask), z_(z_mask),
        phase_(((phase_power_of_i % 4) + 4) % 4) {
    const std::uint64_t valid = n_ == 64 ? ~0ULL : ((1ULL << n_) - 1);
    if ((x_ | z_) & ~valid) throw ArgumentError("pauli mask exceeds qubit count");
  }

  /// Parses text such as "XZIY": leftmost character is qubit n-1.
  static PauliString from_text(const std::string& text);

  /// Single Pauli acting on one qubit of an n-qubit register. op is one of
  /// 'I', 'X', 'Y', 'Z'.
  static PauliString single(int n_qubits, int qubit, char op);

  int n_qubits() const { return n_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  /// Phase as a power of i, in {0, 1, 2, 3}.
  int phase_power() const { return phase_; }
  cplx phase() const {
    static constexpr cplx table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[phase_];
  }

  bool is_identity() const { return x_ == 0 && z_ == 0; }
  /// Number of qubits acted on nontrivially.
  int weight() const;

  /// Same string with phase forced to +1.
  PauliString unsigned_string() const { return {n_, x_, z_, 0}; }
  PauliString with_phase(int phase_power) const { return {n_, x_, z_, phase_power}; }

  PauliString adjoint() const { return {n_, x_, z_, -phase_}; }

  /// Text rendering, leftmost = qubit n-1. Phase is not rendered.
  std::string text() const;

  /// Letter on one qubit: 'I', 'X', 'Y' or 'Z'.
  char letter(int qubit) const;

  /// Ordering on (z, x) masks then phase; gives every module a stable term order.
  friend bool operator<(const PauliString& a, const PauliString& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    if (a.z_ != b.z_) return a.z_ < b.z_;
    if (a.x_ != b.x_) return a.x_ < b.x_;
    return a.phase_ < b.phase_;
  }
  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.n_ == b.n_ && a.x_ == b.x_ && a.z_ == b.z_ && a.phase_ == b.phase_;
  }

 private:
  static int check_n(int n) {
    if (n < 0 || n > kMaxQubits) throw ArgumentError("qubit count out of range");
    return n;
  }

  int n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  int phase_ = 0;  // power of i
};

/// Group product a*b with tracked phase; symplectic masks XOR.
PauliString multiply(const PauliString& a, const PauliString& b);

/// Whether ab = ba.
bool commutes(const PauliString& a, const PauliString& b);

/// Whether a and b commute on every qubit individually (a stronger condition
/// used for simultaneous single-basis measurement).
bool qubitwise_commutes(const PauliString& a, const PauliString& b);

/// A complex-weighted sum of Pauli strings. Stored strings always carry phase
/// +1 (phases are folded into the coefficients), duplicates are merged, and
/// coefficients below the prune threshold are dropped.
class PauliSum {
 public:
  PauliSum() = default;
  explicit PauliSum(int n_qubits, double prune_threshold = kDefaultPruneThreshold)
      : n_(n_qubits), prune_(prune_threshold) {}

  /// Sum with a single term.
  PauliSum(const PauliString& p, cplx coefficient);

  static PauliSum identity(int n_qubits, cplx coefficient = 1.0);

  int n_qubits() const { return n_; }
  double prune_threshold() const { return prune_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Terms in stable (mask-sorted) order.
  const std::map<PauliString, cplx>& terms() const { return terms_; }

  /// Adds coefficient * p, folding p's phase into the coefficient.
  void add_term(const PauliString& p, cplx coefficient);

  cplx coefficient(const PauliString& p) const;

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(cplx scale);
  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(PauliSum a, cplx s) { return a *= s; }
  friend PauliSum operator*(cplx s, PauliSum a) { return a *= s; }
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

  PauliSum adjoint() const;

  /// Removes terms with |coefficient| below the threshold (the stored one by
  /// default).
  void prune(double threshold = -1.0);

  /// Max-abs coefficient difference with another sum (union of supports).
  double max_abs_diff(const PauliSum& other) const;

  /// Sum of absolute coefficients (the LCU alpha when all terms are unitary).
  double one_norm() const;

  bool is_hermitian(double tol = 1e-12) const;

 private:
  void check_same_size(const PauliSum& other) const {
    if (n_ != other.n_) throw DimensionError("PauliSum size mismatch");
  }

  int n_ = 0;
  double prune_ = kDefaultPruneThreshold;
  std::map<PauliString, cplx> terms_;
};

/// AB - BA as a pruned PauliSum.
PauliSum commutator(const PauliSum& a, const PauliSum& b);

/// Partition of the terms of H into groups whose members pairwise commute
/// (qubit-wise commutation when qubitwise = true). Greedy largest-first
/// coloring of the anticommutation graph; deterministic via mask order.
std::vector<std::vector<std::pair<PauliString, cplx>>> group_commuting(
    const PauliSum& h, bool qubitwise = false);

}  // namespace qce
