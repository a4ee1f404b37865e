// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#include "qce/pauli.hpp"

#include <algorithm>
#include <bit>

namespace qce {

namespace {

int popcount(std::uint64_t v) { return std::popcount(v); }

}  // namespace

PauliString PauliString::from_text(const std::string& text) {
  const int n = static_cast<int>(text.size());
  if (n == 0 || n > kMaxQubits) throw ParseError("pauli text length out of range");
  std::uint64_t x = 0, z = 0;
  for (int i = 0; i < n; ++i) {
    const char c = text[i];
    const int qubit = n - 1 - i;  // leftmost character is qubit n-1
    switch (c) {
      case 'I': break;
      case 'X': x |= 1ULL << qubit; break;
      case 'Y': x |= 1ULL << qubit; z |= 1ULL << qubit; break;
      case 'Z': z |= 1ULL << qubit; break;
      default:
        throw ParseError("invalid pauli letter '" + std::string(1, c) +
                         "' at position " + std::to_string(i));
    }
  }
  return {n, x, z, 0};
}

PauliString PauliString::single(int n_qubits, int qubit, char op) {
  if (qubit < 0 || qubit >= n_qubits) throw ArgumentError("qubit index out of range");
  std::uint64_t x = 0, z = 0;
  switch (op) {
    case 'I': break;
    case 'X': x = 1ULL << qubit; break;
    case 'Y': x = z = 1ULL << qubit; break;
    case 'Z': z = 1ULL << qubit; break;
    default: throw ArgumentError("invalid pauli letter");
  }
  return {n_qubits, x, z, 0};
}

int PauliString::weight() const { return popcount(x_ | z_); }

std::string PauliString::text() const {
  std::string out(static_cast<std::size_t>(n_), 'I');
  for (int q = 0; q < n_; ++q) out[n_ - 1 - q] = letter(q);
  return out;
}

char PauliString::letter(int qubit) const {
  const bool xb = (x_ >> qubit) & 1, zb = (z_ >> qubit) & 1;
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) throw DimensionError("PauliString size mismatch");
  const std::uint64_t xa = a.x_mask(), za = a.z_mask();
  const std::uint64_t xb = b.x_mask(), zb = b.z_mask();
  const std::uint64_t x = xa ^ xb, z = za ^ zb;
  // Phase of the product in the convention sigma(x,z) = i^{x.z} X^x Z^z:
  //   i^{xa.za} i^{xb.zb} (-1)^{za.xb} = i^{eps} sigma(x,z) with
  //   eps = xa.za + xb.zb - x.z + 2 za.xb  (mod 4).
  int eps = popcount(xa & za) + popcount(xb & zb) - popcount(x & z) +
            2 * popcount(za & xb);
  eps += a.phase_power() + b.phase_power();
  return {a.n_qubits(), x, z, eps};
}

bool commutes(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) throw DimensionError("PauliString size mismatch");
  const int form = popcount(a.x_mask() & b.z_mask()) ^ popcount(a.z_mask() & b.x_mask());
  return (form & 1) == 0;
}

bool qubitwise_commutes(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) throw DimensionError("PauliString size mismatch");
  // Per qubit: both trivial, or equal letters.
  const std::uint64_t sa = a.x_mask() | a.z_mask();
  const std::uint64_t sb = b.x_mask() | b.z_mask();
  const std::uint64_t both = sa & sb;
  return ((a.x_mask() ^ b.x_mask()) & both) == 0 &&
         ((a.z_mask() ^ b.z_mask()) & both) == 0;
}

PauliSum::PauliSum(const PauliString& p, cplx coefficient) : n_(p.n_qubits()) {
  add_term(p, coefficient);
}

PauliSum PauliSum::identity(int n_qubits, cplx coefficient) {
  return {PauliString(n_qubits), coefficient};
}

void PauliSum::add_term(const PauliString& p, cplx coefficient) {
  if (n_ == 0 && terms_.empty()) n_ = p.n_qubits();
  if (p.n_qubits() != n_) throw DimensionError("PauliSum term size mismatch");
  const cplx c = coefficient * p.phase();
  auto [it, inserted] = terms_.try_emplace(p.unsigned_string(), c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < prune_) terms_.erase(it);
}

cplx PauliSum::coefficient(const PauliString& p) const {
  auto it = terms_.find(p.unsigned_string());
  if (it == terms_.end()) return 0.0;
  return it->second * p.phase();
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  check_same_size(other);
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  check_same_size(other);
  for (const auto& [p, c] : other.terms_) add_term(p, -c);
  return *this;
}

PauliSum& PauliSum::operator*=(cplx scale) {
  if (std::abs(scale) == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= scale;
  prune();
  return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  a.check_same_size(b);
  PauliSum out(a.n_qubits(), std::min(a.prune_threshold(), b.prune_threshold()));
  for (const auto& [pa, ca] : a.terms()) {
    for (const auto& [pb, cb] : b.terms()) {
      out.add_term(multiply(pa, pb), ca * cb);
    }
  }
  return out;
}

PauliSum PauliSum::adjoint() const {
  PauliSum out(n_, prune_);
  for (const auto& [p, c] : terms_) out.add_term(p, std::conj(c));
  return out;
}

void PauliSum::prune(double threshold) {
  const double tol = threshold < 0 ? prune_ : threshold;
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) < tol) it = terms_.erase(it);
    else ++it;
  }
}

double PauliSum::max_abs_diff(const PauliSum& other) const {
  check_same_size(other);
  double m = 0.0;
  for (const auto& [p, c] : terms_) m = std::max(m, std::abs(c - other.coefficient(p)));
  for (const auto& [p, c] : other.terms_) m = std::max(m, std::abs(coefficient(p) - c));
  return m;
}

double PauliSum::one_norm() const {
  double s = 0.0;
  for (const auto& [p, c] : terms_) s += std::abs(c);
  return s;
}

bool PauliSum::is_hermitian(double tol) const {
  for (const auto& [p, c] : terms_) {
    if (std::abs(c.imag()) > tol) return false;
  }
  return true;
}

PauliSum commutator(const PauliSum& a, const PauliSum& b) {
  PauliSum out = a * b;
  out -= b * a;
  out.prune();
  return out;
}

std::vector<std::vector<std::pair<PauliString, cplx>>> group_commuting(
    const PauliSum& h, bool qubitwise) {
  std::vector<std::pair<PauliString, cplx>> terms(h.terms().begin(), h.terms().end());
  const std::size_t m = terms.size();
  if (m == 0) return {};

  auto compatible = [&](std::size_t i, std::size_t j) {
    return qubitwise ? qubitwise_commutes(terms[i].first, terms[j].first)
                     : commutes(terms[i].first, terms[j].first);
  };

  // Degrees in the anticommutation graph.
  std::vector<int> degree(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!compatible(i, j)) {
        ++degree[i];
        ++degree[j];
      }
    }
  }
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });

  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t v : order) {
    bool placed = false;
    for (auto& g : groups) {
      bool ok = true;
      for (std::size_t u : g) {
        if (!compatible(v, u)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        g.push_back(v);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({v});
  }

  std::vector<std::vector<std::pair<PauliString, cplx>>> out;
  out.reserve(groups.size());
  for (auto& g : groups) {
    std::sort(g.begin(), g.end());
    std::vector<std::pair<PauliString, cplx>> grp;
    grp.reserve(g.size());
    for (std::size_t v : g) grp.push_back(terms[v]);
    out.push_back(std::move(grp));
  }
  return out;
}

}  // namespace qce
