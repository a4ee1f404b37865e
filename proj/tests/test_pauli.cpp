// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#include <complex>

#include "doctest.h"
#include "qce/dense.hpp"
#include "qce/pauli.hpp"
#include "qce/rng.hpp"

using namespace qce;

namespace {

// Independent Kronecker-product oracle: builds the dense matrix letter by
// letter, with qubit 0 as the rightmost tensor factor.
Matrix kron_oracle(const PauliString& p) {
  Matrix m = Matrix::Identity(1, 1);
  for (int q = p.n_qubits() - 1; q >= 0; --q) {
    Matrix f;
    switch (p.letter(q)) {
      case 'I': f = mats::identity2(); break;
      case 'X': f = mats::x(); break;
      case 'Y': f = mats::y(); break;
      case 'Z': f = mats::z(); break;
    }
    m = kron(m, f);
  }
  return p.phase() * m;
}

Matrix kron_oracle(const PauliSum& a) {
  const std::int64_t dim = 1LL << a.n_qubits();
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto& [p, c] : a.terms()) m += c * kron_oracle(p);
  return m;
}

PauliString random_string(CounterRng& rng, int n) {
  return {n, rng.next_u64() & ((1ULL << n) - 1), rng.next_u64() & ((1ULL << n) - 1),
          static_cast<int>(rng.next_below(4))};
}

PauliSum random_sum(CounterRng& rng, int n, int terms, bool hermitian = false) {
  PauliSum s(n);
  for (int i = 0; i < terms; ++i) {
    PauliString p = random_string(rng, n).unsigned_string();
    cplx c = hermitian ? cplx(rng.uniform(-1, 1), 0)
                       : cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
    s.add_term(p, c);
  }
  return s;
}

}  // namespace

TEST_CASE("single-qubit products") {
  const auto X = PauliString::from_text("X");
  const auto Y = PauliString::from_text("Y");
  const auto Z = PauliString::from_text("Z");

  // X * Y = iZ
  auto xy = multiply(X, Y);
  CHECK(xy.unsigned_string() == Z);
  CHECK(xy.phase() == cplx(0, 1));

  // Y * X = -iZ
  auto yx = multiply(Y, X);
  CHECK(yx.phase() == cplx(0, -1));

  // P * P = +1 for any P
  for (const auto& p : {X, Y, Z}) {
    auto sq = multiply(p, p);
    CHECK(sq.is_identity());
    CHECK(sq.phase() == cplx(1, 0));
  }
}

TEST_CASE("two-qubit product against Kronecker oracle") {
  // (X (x) Z) * (Y (x) Z) = i (Z (x) I); leftmost letter is qubit 1.
  const auto a = PauliString::from_text("XZ");
  const auto b = PauliString::from_text("YZ");
  const auto prod = multiply(a, b);
  CHECK(prod.unsigned_string() == PauliString::from_text("ZI"));
  CHECK(prod.phase() == cplx(0, 1));
  CHECK((kron_oracle(prod) - kron_oracle(a) * kron_oracle(b)).cwiseAbs().maxCoeff() <
        1e-15);
}

TEST_CASE("group law on random pairs, n <= 6") {
  CounterRng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_below(6));
    const auto a = random_string(rng, n);
    const auto b = random_string(rng, n);
    const auto prod = multiply(a, b);
    const double err =
        (to_dense(prod, 6) - kron_oracle(a) * kron_oracle(b)).cwiseAbs().maxCoeff();
    CHECK(err < 1e-12);
  }
}

TEST_CASE("to_dense agrees with the Kronecker oracle") {
  CounterRng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_below(5));
    const auto a = random_string(rng, n);
    CHECK((to_dense(a, 6) - kron_oracle(a)).cwiseAbs().maxCoeff() < 1e-15);
  }
}

TEST_CASE("to_dense basis ordering") {
  // Z on one qubit.
  Matrix z1 = to_dense(PauliString::from_text("Z"));
  CHECK(z1(0, 0) == cplx(1, 0));
  CHECK(z1(1, 1) == cplx(-1, 0));

  // Z_1 on two qubits: diag(1, 1, -1, -1) in basis order |z1 z0> = 00,01,10,11.
  Matrix z = to_dense(PauliString::single(2, 1, 'Z'));
  CHECK(z(0, 0) == cplx(1, 0));
  CHECK(z(1, 1) == cplx(1, 0));
  CHECK(z(2, 2) == cplx(-1, 0));
  CHECK(z(3, 3) == cplx(-1, 0));
}

TEST_CASE("dense form of real-coefficient sums is Hermitian") {
  CounterRng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = random_sum(rng, 3, 6, /*hermitian=*/true);
    const Matrix m = to_dense(s);
    CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("to_dense cap") {
  CHECK_THROWS_AS(to_dense(PauliString(13)), ResourceError);
}

TEST_CASE("commutes") {
  const auto X = PauliString::from_text("X");
  const auto Z = PauliString::from_text("Z");
  CHECK_FALSE(commutes(X, Z));
  CHECK(commutes(PauliString::from_text("XX"), PauliString::from_text("ZZ")));
  CHECK_THROWS_AS(commutes(X, PauliString::from_text("XX")), DimensionError);
}

TEST_CASE("commutes matches dense commutator norm on 1000 random pairs") {
  CounterRng rng(14);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_below(6));
    const auto a = random_string(rng, n).unsigned_string();
    const auto b = random_string(rng, n).unsigned_string();
    const Matrix da = kron_oracle(a), db = kron_oracle(b);
    const double comm_norm = (da * db - db * da).cwiseAbs().maxCoeff();
    CHECK(commutes(a, b) == (comm_norm < 1e-12));
  }
}

TEST_CASE("commutator examples") {
  PauliSum z(PauliString::from_text("Z"), 1.0);
  CHECK(commutator(z, z).empty());

  PauliSum x(PauliString::from_text("X"), 1.0);
  PauliSum y(PauliString::from_text("Y"), 1.0);
  const PauliSum c = commutator(x, y);  // [X, Y] = 2iZ
  CHECK(c.size() == 1);
  CHECK(std::abs(c.coefficient(PauliString::from_text("Z")) - cplx(0, 2)) < 1e-15);
}

TEST_CASE("commutator of random sums against dense oracle") {
  CounterRng rng(15);
  for (int trial = 0; trial < 25; ++trial) {
    const auto a = random_sum(rng, 3, 5);
    const auto b = random_sum(rng, 3, 5);
    const Matrix oracle = kron_oracle(a) * kron_oracle(b) - kron_oracle(b) * kron_oracle(a);
    const double err = (to_dense(commutator(a, b)) - oracle).cwiseAbs().maxCoeff();
    CHECK(err < 1e-12);
  }
}

TEST_CASE("sum algebra is associative and distributive, checked densely") {
  CounterRng rng(16);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_sum(rng, 2, 4);
    const auto b = random_sum(rng, 2, 4);
    const auto c = random_sum(rng, 2, 4);
    const double assoc =
        (to_dense((a * b) * c) - to_dense(a * (b * c))).cwiseAbs().maxCoeff();
    const double distr =
        (to_dense(a * (b + c)) - to_dense(a * b + a * c)).cwiseAbs().maxCoeff();
    CHECK(assoc < 1e-12);
    CHECK(distr < 1e-12);
  }
}

TEST_CASE("phases fold into coefficients and duplicates merge") {
  PauliSum s(2);
  s.add_term(PauliString(2, 1, 1, 1), 1.0);       // i * (phase i folds to -1 ... )
  s.add_term(PauliString(2, 1, 1, 0), cplx(0, 1));  // same string, explicit i coeff
  for (const auto& [p, c] : s.terms()) {
    CHECK(p.phase_power() == 0);
  }
  CHECK(s.size() == 1);
}

TEST_CASE("pruning") {
  PauliSum s(1);
  s.add_term(PauliString::from_text("X"), 1e-15);
  CHECK(s.empty());
  PauliSum loose(1, 1e-3);
  loose.add_term(PauliString::from_text("X"), 1e-4);
  CHECK(loose.empty());
}

TEST_CASE("group_commuting examples") {
  // {Z0, Z1, X0X1} -> {{Z0, Z1}, {X0X1}}
  PauliSum h(2);
  h.add_term(PauliString::single(2, 0, 'Z'), 1.0);
  h.add_term(PauliString::single(2, 1, 'Z'), 0.5);
  h.add_term(PauliString::from_text("XX"), 0.25);
  const auto groups = group_commuting(h);
  CHECK(groups.size() == 2);
  std::size_t total = 0;
  for (const auto& g : groups) {
    total += g.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = i + 1; j < g.size(); ++j) {
        CHECK(commutes(g[i].first, g[j].first));
      }
    }
  }
  CHECK(total == h.size());

  // all-Z sums land in one group
  PauliSum zz(3);
  zz.add_term(PauliString::from_text("ZII"), 1.0);
  zz.add_term(PauliString::from_text("IZI"), 1.0);
  zz.add_term(PauliString::from_text("ZZZ"), 1.0);
  CHECK(group_commuting(zz).size() == 1);

  // empty sum -> empty partition
  CHECK(group_commuting(PauliSum(3)).empty());
}

TEST_CASE("group_commuting on random sums: internally commuting, jointly exhaustive") {
  CounterRng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const auto h = random_sum(rng, 4, 12, true);
    for (bool qubitwise : {false, true}) {
      const auto groups = group_commuting(h, qubitwise);
      std::size_t total = 0;
      for (const auto& g : groups) {
        total += g.size();
        for (std::size_t i = 0; i < g.size(); ++i) {
          for (std::size_t j = i + 1; j < g.size(); ++j) {
            CHECK(commutes(g[i].first, g[j].first));
            if (qubitwise) CHECK(qubitwise_commutes(g[i].first, g[j].first));
          }
        }
      }
      CHECK(total == h.size());
    }
  }
}

TEST_CASE("text round trip and rejection") {
  const auto p = PauliString::from_text("XZIY");
  CHECK(p.text() == "XZIY");
  CHECK(p.letter(0) == 'Y');
  CHECK(p.letter(3) == 'X');
  CHECK_THROWS_AS(PauliString::from_text("XQ"), ParseError);
}
