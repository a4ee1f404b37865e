// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0
//
// Test-only oracles, independent of the library's encoding and simulation
// paths: a direct Fock-space matrix builder and small helpers shared across
// suites.

#pragma once

#include <algorithm>
#include <bit>
#include <vector>

#include "qce/dense.hpp"
#include "qce/fermion.hpp"
#include "qce/rng.hpp"

namespace qce::test {

// Dense Fock-space matrix of a fermionic operator, built by acting with
// ladder operators on occupation bitstrings. Sign convention: a_k |x> =
// (-1)^{x_0 + ... + x_{k-1}} x_k |x - e_k| (modes below k count).
inline Matrix fock_dense(const FermionOperator& op) {
  const int m = op.n_modes();
  const std::int64_t dim = 1LL << m;
  Matrix out = Matrix::Zero(dim, dim);
  for (const auto& [ops, c] : op.terms()) {
    for (std::int64_t b = 0; b < dim; ++b) {
      std::uint64_t state = static_cast<std::uint64_t>(b);
      double sign = 1.0;
      bool dead = false;
      for (auto it = ops.rbegin(); it != ops.rend(); ++it) {  // rightmost first
        const std::uint64_t bit = 1ULL << it->mode;
        const bool occupied = state & bit;
        if (it->dagger == occupied) {
          dead = true;
          break;
        }
        if (std::popcount(state & (bit - 1)) & 1) sign = -sign;
        state ^= bit;
      }
      if (!dead) out(static_cast<std::int64_t>(state), b) += c * sign;
    }
  }
  return out;
}

inline std::vector<double> sorted_eigs(const Matrix& h) {
  return eigenvalues_hermitian(h);
}

inline double max_multiset_distance(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size()) return 1e300;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

// Random Hermitian fermionic operator with one- and two-body terms.
inline FermionOperator random_fermion_hamiltonian(CounterRng& rng, int m,
                                                  int n_quadratic, int n_quartic) {
  FermionOperator h(m);
  for (int t = 0; t < n_quadratic; ++t) {
    const int p = static_cast<int>(rng.next_below(m));
    const int q = static_cast<int>(rng.next_below(m));
    const cplx c{rng.uniform(-1, 1), p == q ? 0.0 : rng.uniform(-1, 1)};
    h.add_term({{p, true}, {q, false}}, c);
    if (p != q) h.add_term({{q, true}, {p, false}}, std::conj(c));
  }
  for (int t = 0; t < n_quartic; ++t) {
    const int p = static_cast<int>(rng.next_below(m));
    int q = static_cast<int>(rng.next_below(m));
    while (q == p) q = static_cast<int>(rng.next_below(m));
    const int r = static_cast<int>(rng.next_below(m));
    int s = static_cast<int>(rng.next_below(m));
    while (s == r) s = static_cast<int>(rng.next_below(m));
    const cplx c{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    h.add_term({{p, true}, {q, true}, {s, false}, {r, false}}, c);
    h.add_term({{r, true}, {s, true}, {q, false}, {p, false}}, std::conj(c));
  }
  return h;
}

}  // namespace qce::test
