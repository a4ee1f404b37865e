// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qce/circuit.hpp"
#include "qce/integrals.hpp"
#include "qce/pauli.hpp"

namespace qce {

/// One creation (dagger = true) or annihilation operator on a mode.
struct LadderOp {
  int mode;
  bool dagger;
  friend auto operator<=>(const LadderOp&, const LadderOp&) = default;
};

/// A second-quantized operator: complex combination of ladder-operator
/// products, kept in normal order (creators ascending, then annihilators
/// descending) with anticommutation signs and contractions tracked.
class FermionOperator {
 public:
  FermionOperator() = default;
  explicit FermionOperator(int n_modes) : m_(n_modes) {}

  int n_modes() const { return m_; }
  const std::map<std::vector<LadderOp>, cplx>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Adds coefficient * (product of ops, leftmost acting last), normal
  /// ordering as needed.
  void add_term(const std::vector<LadderOp>& ops, cplx coefficient);

  void add_constant(cplx value) { add_term({}, value); }

  FermionOperator& operator+=(const FermionOperator& other);
  FermionOperator& operator-=(const FermionOperator& other);
  FermionOperator& operator*=(cplx scale);
  friend FermionOperator operator+(FermionOperator a, const FermionOperator& b) {
    return a += b;
  }
  friend FermionOperator operator-(FermionOperator a, const FermionOperator& b) {
    return a -= b;
  }
  friend FermionOperator operator*(const FermionOperator& a, const FermionOperator& b);

  FermionOperator adjoint() const;

  /// Total-number operator sum_k n_k.
  static FermionOperator number_operator(int n_modes);

 private:
  int m_ = 0;
  std::map<std::vector<LadderOp>, cplx> terms_;
};

enum class EncodingKind { JordanWigner, Parity, ParityTwoQubitReduced, BravyiKitaev };

/// How spatial orbitals map to spin-orbital mode indices.
enum class SpinOrder { blocked, interleaved };

/// A linear GF(2) occupation-to-qubit code b = A x. Rows of A and A^{-1} are
/// stored as bit masks; JW is the identity code, parity the prefix-sum code,
/// and Bravyi-Kitaev the binary-tree code.
class BinaryCode {
 public:
  static BinaryCode jordan_wigner(int m);
  static BinaryCode parity(int m);
  static BinaryCode bravyi_kitaev(int m);

  int n_modes() const { return m_; }

  /// Encoded image of an occupation bitstring.
  std::uint64_t encode_state(std::uint64_t occupations) const;

  /// Pauli image of a single creation (dagger) or annihilation operator.
  PauliSum encode_ladder(int mode, bool dagger) const;

  /// Pauli image of a whole operator.
  PauliSum encode(const FermionOperator& op) const;

 private:
  explicit BinaryCode(int m) : m_(m), a_rows_(m, 0), ainv_rows_(m, 0) {}
  void invert();

  int m_;
  std::vector<std::uint64_t> a_rows_;     // row k: bits j with A_{kj} = 1
  std::vector<std::uint64_t> ainv_rows_;  // row j of A^{-1}
};

PauliSum jordan_wigner(const FermionOperator& op);
PauliSum bravyi_kitaev(const FermionOperator& op);

/// Parity encoding. With reduce_two_qubits, modes must be even and blocked by
/// spin: the top qubit of each spin block (M/2-1 and M-1) is replaced by the
/// supplied sector parities ((-1)^{N_up} and (-1)^{N_up + N_down}) and
/// removed, so the result acts on M-2 qubits.
PauliSum parity_encode(const FermionOperator& op, bool reduce_two_qubits = false,
                       int n_up_parity = 0, int n_down_parity = 0);

/// An abelian symmetry group of a Hamiltonian: generators tau_i, the pivot
/// qubits they map to, a Clifford circuit U with tau_i = U^dag Z_{q_i} U, and
/// the sector eigenvalues to use when tapering.
struct SymmetrySector {
  std::vector<PauliString> generators;
  std::vector<int> qubits;       // pivot qubit per generator
  Circuit clifford;
  std::vector<int> eigenvalues;  // +1 or -1 per generator

  std::size_t size() const { return generators.size(); }
};

/// Finds the Z2 symmetries of H: the GF(2) kernel of H's check matrix,
/// restricted to its own commutant so every returned generator can be tapered
/// simultaneously. Empty result when no symmetry exists. Eigenvalues are
/// initialized to +1.
SymmetrySector find_z2_symmetries(const PauliSum& h);

/// Conjugates by the sector Clifford, substitutes the sector eigenvalues on
/// the symmetry qubits, and drops them. Output acts on n - k qubits.
PauliSum taper(const PauliSum& h, const SymmetrySector& sector);

/// U P U^dag for a single Clifford gate (H, S, Sdg, X, Y, Z, CNOT, Swap, or a
/// +/- pi/2 Pauli rotation).
PauliString clifford_conjugate(const PauliString& p, const Gate& g);

enum class BosonCode { binary, gray, unary };

struct BosonBits {
  std::uint64_t bits;
  int n_bits;
  std::string text() const;
};

/// Bit pattern of level l among d levels: standard binary or Gray on
/// ceil(log2 d) bits, or one-hot on d bits.
BosonBits encode_boson_level(int d, BosonCode scheme, int level);

/// Second-quantized Born-Oppenheimer Hamiltonian over 2 * n_spatial spin
/// orbitals: E_nuc + sum h_pr a^dag_p a_r + 1/2 sum (pr|qs) a^dag_p a^dag_q
/// a_s a_r, spin-up modes first when blocked.
FermionOperator build_molecular_hamiltonian(const MolecularIntegrals& ints,
                                            SpinOrder order = SpinOrder::blocked);

}  // namespace qce
