// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#include <bit>
#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "qce/fermion.hpp"

using namespace qce;
using test::fock_dense;
using test::max_multiset_distance;
using test::sorted_eigs;

TEST_CASE("jordan_wigner of a creation operator") {
  FermionOperator op(2);
  op.add_term({{1, true}}, 1.0);
  const PauliSum jw = jordan_wigner(op);
  // (X1 - iY1)/2 (x) Z0: two terms
  CHECK(jw.size() == 2);
  CHECK(std::abs(jw.coefficient(PauliString::from_text("XZ")) - 0.5) < 1e-15);
  CHECK(std::abs(jw.coefficient(PauliString::from_text("YZ")) - cplx(0, -0.5)) < 1e-15);
}

TEST_CASE("number operator in JW is (1 - Z0)/2") {
  FermionOperator op(1);
  op.add_term({{0, true}, {0, false}}, 1.0);
  const PauliSum jw = jordan_wigner(op);
  CHECK(std::abs(jw.coefficient(PauliString(1)) - 0.5) < 1e-15);
  CHECK(std::abs(jw.coefficient(PauliString::from_text("Z")) + 0.5) < 1e-15);
}

TEST_CASE("canonical anticommutation relations survive every encoding") {
  const int m = 4;
  for (int code_id = 0; code_id < 3; ++code_id) {
    const BinaryCode code = code_id == 0   ? BinaryCode::jordan_wigner(m)
                            : code_id == 1 ? BinaryCode::parity(m)
                                           : BinaryCode::bravyi_kitaev(m);
    for (int p = 0; p < m; ++p) {
      for (int q = 0; q < m; ++q) {
        const PauliSum ap = code.encode_ladder(p, false);
        const PauliSum aqd = code.encode_ladder(q, true);
        PauliSum anti = ap * aqd + aqd * ap;
        if (p == q) anti -= PauliSum::identity(m, 1.0);
        anti.prune(1e-12);
        CHECK(anti.empty());
      }
    }
  }
}

TEST_CASE("JW image equals the Fock oracle matrix elementwise") {
  CounterRng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const int m = 2 + static_cast<int>(rng.next_below(4));
    const auto h = test::random_fermion_hamiltonian(rng, m, 3, 2);
    const Matrix viaJW = to_dense(jordan_wigner(h));
    const Matrix oracle = fock_dense(h);
    CHECK((viaJW - oracle).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("parity and BK images are basis permutations of the Fock oracle") {
  CounterRng rng(42);
  for (int code_id = 1; code_id <= 2; ++code_id) {
    for (int trial = 0; trial < 5; ++trial) {
      const int m = 2 + static_cast<int>(rng.next_below(4));
      const BinaryCode code =
          code_id == 1 ? BinaryCode::parity(m) : BinaryCode::bravyi_kitaev(m);
      const auto h = test::random_fermion_hamiltonian(rng, m, 3, 2);
      const Matrix enc = to_dense(code.encode(h));
      const Matrix oracle = fock_dense(h);
      const std::int64_t dim = 1LL << m;
      double err = 0.0;
      for (std::int64_t col = 0; col < dim; ++col) {
        for (std::int64_t row = 0; row < dim; ++row) {
          const auto erow = static_cast<std::int64_t>(
              code.encode_state(static_cast<std::uint64_t>(row)));
          const auto ecol = static_cast<std::int64_t>(
              code.encode_state(static_cast<std::uint64_t>(col)));
          err = std::max(err, std::abs(enc(erow, ecol) - oracle(row, col)));
        }
      }
      CHECK(err < 1e-12);
    }
  }
}

TEST_CASE("parity state map: JW |0101> corresponds to |0011>") {
  const BinaryCode parity = BinaryCode::parity(4);
  CHECK(parity.encode_state(0b0101) == 0b0011);
}

TEST_CASE("encoding invariance: JW, parity, BK spectra agree at M <= 6") {
  CounterRng rng(43);
  for (int trial = 0; trial < 6; ++trial) {
    const int m = 3 + static_cast<int>(rng.next_below(4));
    const auto h = test::random_fermion_hamiltonian(rng, m, 4, 3);
    const auto jw = sorted_eigs(to_dense(jordan_wigner(h)));
    const auto par = sorted_eigs(to_dense(parity_encode(h)));
    const auto bk = sorted_eigs(to_dense(bravyi_kitaev(h)));
    CHECK(max_multiset_distance(jw, par) < 1e-10);
    CHECK(max_multiset_distance(jw, bk) < 1e-10);
  }
}

TEST_CASE("BK single mode matches JW") {
  FermionOperator op(1);
  op.add_term({{0, true}}, 1.0);
  CHECK(jordan_wigner(op).max_abs_diff(bravyi_kitaev(op)) < 1e-15);
}

TEST_CASE("BK encoded operators touch O(log M) qubits") {
  std::vector<int> max_weight;
  for (int m : {2, 4, 8, 16}) {
    const BinaryCode code = BinaryCode::bravyi_kitaev(m);
    int w = 0;
    for (int k = 0; k < m; ++k) {
      const PauliSum enc = code.encode_ladder(k, true);
      for (const auto& [p, c] : enc.terms()) w = std::max(w, p.weight());
    }
    max_weight.push_back(w);
  }
  // Logarithmic growth; JW would give weights 2, 4, 8, 16.
  const int log2m[] = {1, 2, 3, 4};
  for (std::size_t i = 0; i < max_weight.size(); ++i) {
    CHECK(max_weight[i] <= 2 * log2m[i] + 1);
  }
  CHECK(max_weight.back() < 16 / 2);
}

TEST_CASE("two-qubit-reduced parity encoding keeps sector spectra") {
  CounterRng rng(44);
  // Spin-conserving Hamiltonian from random symmetric integrals.
  MolecularIntegrals ints(2, 2, 0, 0.3);
  ints.set_h(0, 0, rng.uniform(-1, 1));
  ints.set_h(1, 1, rng.uniform(-1, 1));
  ints.set_h(0, 1, rng.uniform(-0.5, 0.5));
  ints.set_eri(0, 0, 0, 0, rng.uniform(0, 1));
  ints.set_eri(1, 1, 1, 1, rng.uniform(0, 1));
  ints.set_eri(0, 0, 1, 1, rng.uniform(0, 1));
  ints.set_eri(0, 1, 0, 1, rng.uniform(0, 0.5));
  const FermionOperator h = build_molecular_hamiltonian(ints);

  const auto full = sorted_eigs(to_dense(jordan_wigner(h)));
  std::vector<double> merged;
  for (int pu = 0; pu < 2; ++pu) {
    for (int pd = 0; pd < 2; ++pd) {
      const PauliSum red = parity_encode(h, true, pu, pd);
      CHECK(red.n_qubits() == 2);
      const auto eigs = sorted_eigs(to_dense(red));
      merged.insert(merged.end(), eigs.begin(), eigs.end());
    }
  }
  CHECK(max_multiset_distance(full, merged) < 1e-10);
}

TEST_CASE("two-qubit reduction rejects odd mode counts") {
  FermionOperator op(3);
  op.add_term({{0, true}, {0, false}}, 1.0);
  CHECK_THROWS_AS(parity_encode(op, true, 0, 0), ArgumentError);
}

TEST_CASE("clifford_conjugate agrees with dense conjugation") {
  CounterRng rng(45);
  const int n = 3;
  for (int trial = 0; trial < 200; ++trial) {
    Gate g = [&]() -> Gate {
      switch (rng.next_below(9)) {
        case 0: return Gate::single(GateKind::Had, static_cast<int>(rng.next_below(n)));
        case 1: return Gate::single(GateKind::S, static_cast<int>(rng.next_below(n)));
        case 2: return Gate::single(GateKind::Sdg, static_cast<int>(rng.next_below(n)));
        case 3: return Gate::single(GateKind::X, static_cast<int>(rng.next_below(n)));
        case 4: return Gate::single(GateKind::Y, static_cast<int>(rng.next_below(n)));
        case 5: return Gate::single(GateKind::Z, static_cast<int>(rng.next_below(n)));
        case 6: {
          const int c = static_cast<int>(rng.next_below(n));
          int t = static_cast<int>(rng.next_below(n));
          while (t == c) t = static_cast<int>(rng.next_below(n));
          return Gate::cnot(c, t);
        }
        case 7: {
          const int a = 0, b = 1 + static_cast<int>(rng.next_below(n - 1));
          return Gate::swap(a, b);
        }
        default: {
          std::uint64_t x = rng.next_u64() & 7, z = rng.next_u64() & 7;
          if (!x && !z) x = 3;
          const double sign = rng.next_below(2) ? 1.0 : -1.0;
          return Gate::pauli_rotation(PauliString(n, x, z),
                                      sign * 1.5707963267948966);
        }
      }
    }();
    std::uint64_t x = rng.next_u64() & 7, z = rng.next_u64() & 7;
    const PauliString p(n, x, z, 2 * static_cast<int>(rng.next_below(2)));
    const PauliString q = clifford_conjugate(p, g);
    const Matrix u = expand_gate(g, n);
    const Matrix lhs = to_dense(q);
    const Matrix rhs = u * to_dense(p) * u.adjoint();
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("find_z2_symmetries: H = Z0 Z1 gives the single generator Z0 Z1") {
  PauliSum h(2);
  h.add_term(PauliString::from_text("ZZ"), 0.5);
  const auto sector = find_z2_symmetries(h);
  REQUIRE(sector.size() == 1);
  CHECK(sector.generators[0].unsigned_string() == PauliString::from_text("ZZ"));
}

TEST_CASE("symmetry generators map to single-Z under their Clifford") {
  CounterRng rng(46);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 4;
    const auto hf = test::random_fermion_hamiltonian(rng, m, 3, 2);
    const PauliSum h = jordan_wigner(hf);
    const auto sector = find_z2_symmetries(h);
    for (std::size_t i = 0; i < sector.size(); ++i) {
      // commutes with every term
      for (const auto& [p, c] : h.terms()) CHECK(commutes(sector.generators[i], p));
      // tau_i = U^dag Z_{q_i} U, checked by conjugating tau through U
      PauliString image = sector.generators[i];
      for (const auto& g : sector.clifford.gates()) {
        image = clifford_conjugate(image, g);
      }
      CHECK(image == PauliString::single(m, sector.qubits[i], 'Z'));
    }
  }
}

TEST_CASE("tapering: sector spectra partition the full spectrum") {
  CounterRng rng(47);
  int nontrivial = 0;
  for (int trial = 0; trial < 8; ++trial) {
    const int m = 4;
    // Number-conserving instances have at least the two spin parities.
    MolecularIntegrals ints(2, 2, 0, rng.uniform(-0.5, 0.5));
    ints.set_h(0, 0, rng.uniform(-1, 1));
    ints.set_h(1, 1, rng.uniform(-1, 1));
    ints.set_h(0, 1, rng.uniform(-0.5, 0.5));
    ints.set_eri(0, 0, 0, 0, rng.uniform(0, 1));
    ints.set_eri(1, 1, 1, 1, rng.uniform(0, 1));
    ints.set_eri(0, 0, 1, 1, rng.uniform(0, 1));
    ints.set_eri(0, 1, 0, 1, rng.uniform(0, 0.5));
    const PauliSum h = jordan_wigner(build_molecular_hamiltonian(ints));

    auto sector = find_z2_symmetries(h);
    if (sector.size() == 0) continue;
    ++nontrivial;
    const auto k = sector.size();
    const auto full = sorted_eigs(to_dense(h));
    std::vector<double> merged;
    for (std::uint64_t bits = 0; bits < (1ULL << k); ++bits) {
      for (std::size_t i = 0; i < k; ++i) {
        sector.eigenvalues[i] = (bits >> i) & 1 ? -1 : 1;
      }
      const PauliSum tapered = taper(h, sector);
      CHECK(tapered.n_qubits() == m - static_cast<int>(k));
      const auto eigs = sorted_eigs(to_dense(tapered));
      merged.insert(merged.end(), eigs.begin(), eigs.end());
    }
    CHECK(max_multiset_distance(full, merged) < 1e-10);
  }
  CHECK(nontrivial >= 6);
}

TEST_CASE("tapering with no generators returns H unchanged") {
  PauliSum h(2);
  h.add_term(PauliString::from_text("XI"), 0.3);
  h.add_term(PauliString::from_text("ZZ"), 0.8);
  SymmetrySector empty;
  const PauliSum same = taper(h, empty);
  CHECK(same.max_abs_diff(h) < 1e-15);
}

TEST_CASE("taper rejects generators that do not commute with H") {
  PauliSum h(2);
  h.add_term(PauliString::from_text("XI"), 1.0);
  SymmetrySector sector;
  sector.generators = {PauliString::from_text("ZI")};
  sector.qubits = {0};
  sector.clifford = Circuit(2);
  sector.eigenvalues = {1};
  CHECK_THROWS_AS(taper(h, sector), SymmetryError);
}

TEST_CASE("boson level codes") {
  CHECK(encode_boson_level(4, BosonCode::gray, 0).text() == "00");
  CHECK(encode_boson_level(4, BosonCode::gray, 1).text() == "01");
  CHECK(encode_boson_level(4, BosonCode::gray, 2).text() == "11");
  CHECK(encode_boson_level(4, BosonCode::gray, 3).text() == "10");
  CHECK(encode_boson_level(3, BosonCode::unary, 1).text() == "010");
  CHECK(encode_boson_level(5, BosonCode::binary, 0).n_bits == 3);
  CHECK_THROWS_AS(encode_boson_level(4, BosonCode::binary, 4), ArgumentError);

  // Gray adjacency: consecutive codes differ in exactly one bit, d <= 64.
  for (int d = 2; d <= 64; ++d) {
    for (int l = 0; l + 1 < d; ++l) {
      const auto a = encode_boson_level(d, BosonCode::gray, l);
      const auto b = encode_boson_level(d, BosonCode::gray, l + 1);
      CHECK(std::popcount(a.bits ^ b.bits) == 1);
    }
  }
}

TEST_CASE("molecular Hamiltonian: single orbital spectrum over Fock space") {
  MolecularIntegrals ints(1, 2, 0, 0.0);
  ints.set_h(0, 0, -1.0);
  const FermionOperator h = build_molecular_hamiltonian(ints);
  const auto eigs = sorted_eigs(fock_dense(h));
  REQUIRE(eigs.size() == 4);
  CHECK(eigs[0] == doctest::Approx(-2.0));
  CHECK(eigs[1] == doctest::Approx(-1.0));
  CHECK(eigs[2] == doctest::Approx(-1.0));
  CHECK(eigs[3] == doctest::Approx(0.0));
}

TEST_CASE("molecular Hamiltonian is Hermitian and conserves particle number") {
  CounterRng rng(48);
  MolecularIntegrals ints(2, 2, 0, 0.1);
  ints.set_h(0, 0, rng.uniform(-1, 1));
  ints.set_h(1, 1, rng.uniform(-1, 1));
  ints.set_h(0, 1, rng.uniform(-1, 1));
  ints.set_eri(0, 0, 0, 0, rng.uniform(0, 1));
  ints.set_eri(0, 1, 0, 1, rng.uniform(0, 1));
  ints.set_eri(0, 0, 1, 1, rng.uniform(0, 1));
  ints.set_eri(1, 1, 1, 1, rng.uniform(0, 1));
  const FermionOperator h = build_molecular_hamiltonian(ints);
  const PauliSum jw = jordan_wigner(h);
  CHECK(jw.is_hermitian(1e-12));

  const PauliSum n_op = jordan_wigner(FermionOperator::number_operator(4));
  CHECK(commutator(jw, n_op).one_norm() < 1e-10);

  // interleaved ordering keeps the spectrum
  const PauliSum jw_i =
      jordan_wigner(build_molecular_hamiltonian(ints, SpinOrder::interleaved));
  CHECK(max_multiset_distance(sorted_eigs(to_dense(jw)), sorted_eigs(to_dense(jw_i))) <
        1e-10);
}

TEST_CASE("normal ordering: equal-mode nilpotency and contraction") {
  FermionOperator op(2);
  op.add_term({{0, true}, {0, true}}, 1.0);
  CHECK(op.empty());

  // a_0 a^dag_0 = 1 - a^dag_0 a_0
  FermionOperator prod(2);
  prod.add_term({{0, false}, {0, true}}, 1.0);
  CHECK(std::abs(prod.terms().at({}) - 1.0) < 1e-15);
  CHECK(std::abs(prod.terms().at({{0, true}, {0, false}}) + 1.0) < 1e-15);
}

TEST_CASE("fermion operator adjoint against the Fock oracle") {
  CounterRng rng(49);
  const auto h = test::random_fermion_hamiltonian(rng, 3, 2, 2);
  CHECK((fock_dense(h.adjoint()) - fock_dense(h).adjoint()).cwiseAbs().maxCoeff() <
        1e-12);
}
