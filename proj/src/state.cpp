// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#include "qce/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace qce {

StateVector::StateVector(int n_qubits, std::uint64_t basis_state)
    : n_(n_qubits), backend_(kern::default_backend()) {
  if (n_qubits < 0 || n_qubits > kStateCap) {
    throw ResourceError("state vector of " + std::to_string(n_qubits) +
                        " qubits exceeds cap " + std::to_string(kStateCap));
  }
  amps_.assign(1ULL << n_qubits, 0.0);
  if (basis_state >= amps_.size()) throw ArgumentError("basis state out of range");
  amps_[basis_state] = 1.0;
}

StateVector StateVector::from_amplitudes(int n_qubits, std::vector<cplx> amps) {
  StateVector s(n_qubits);
  if (amps.size() != s.amps_.size()) throw DimensionError("amplitude count mismatch");
  s.amps_ = std::move(amps);
  return s;
}

void StateVector::apply(const Gate& g) {
  if (g.is_parametric()) throw ArgumentError("cannot apply an unbound gate");
  std::uint64_t cmask = 0;
  for (int c : g.controls) {
    check_qubit(c);
    cmask |= 1ULL << c;
  }
  switch (g.kind) {
    case GateKind::PauliRotation:
      if (g.pauli.n_qubits() != n_) throw DimensionError("pauli rotation size mismatch");
      kern::apply_pauli_rotation(amps_.data(), dim(), g.pauli.x_mask(),
                                 g.pauli.z_mask(), g.pauli.phase_power(), g.angle,
                                 backend_);
      return;
    case GateKind::Swap:
      check_qubit(g.targets[0]);
      check_qubit(g.targets[1]);
      kern::apply_swap(amps_.data(), dim(), g.targets[0], g.targets[1], cmask,
                       backend_);
      return;
    case GateKind::ControlledU: {
      for (int t : g.targets) check_qubit(t);
      if (g.targets.size() == 1) {
        const Matrix& u = g.matrix;
        const cplx m[4] = {u(0, 0), u(0, 1), u(1, 0), u(1, 1)};
        kern::apply_1q(amps_.data(), dim(), g.targets[0], m, cmask, backend_);
      } else {
        kern::apply_dense_gate(amps_.data(), dim(), g.targets, g.matrix, cmask,
                               backend_);
      }
      return;
    }
    default: {
      check_qubit(g.targets[0]);
      const Matrix u = g.target_matrix();
      const cplx m[4] = {u(0, 0), u(0, 1), u(1, 0), u(1, 1)};
      kern::apply_1q(amps_.data(), dim(), g.targets[0], m, cmask, backend_);
      return;
    }
  }
}

void StateVector::apply(const Circuit& c) {
  if (c.n_qubits() != n_) throw DimensionError("circuit size mismatch");
  for (const auto& g : c.gates()) apply(g);
}

void StateVector::apply_pauli_rotation(const PauliString& p, double theta,
                                       RotationPath path) {
  if (p.n_qubits() != n_) throw DimensionError("pauli size mismatch");
  if (p.phase_power() % 2 != 0) throw ArgumentError("rotation string must be Hermitian");
  const double sign = p.phase_power() == 2 ? -1.0 : 1.0;
  if (p.is_identity()) {
    // Global phase exp(-i theta/2), kept rather than dropped.
    kern::scale(amps_.data(), dim(), std::exp(cplx(0, -sign * theta / 2)), backend_);
    return;
  }
  if (path == RotationPath::direct) {
    kern::apply_pauli_rotation(amps_.data(), dim(), p.x_mask(), p.z_mask(),
                               p.phase_power(), theta, backend_);
  } else {
    apply(pauli_rotation_ladder(p, theta));
  }
}

void StateVector::apply_pauli(const PauliString& p) {
  if (p.n_qubits() != n_) throw DimensionError("pauli size mismatch");
  kern::apply_pauli(amps_.data(), dim(), p.x_mask(), p.z_mask(), p.phase_power(),
                    backend_);
}

void StateVector::apply_operator(const PauliSum& a) {
  if (a.n_qubits() != n_) throw DimensionError("operator size mismatch");
  std::vector<cplx> acc(amps_.size(), 0.0);
  std::vector<cplx> tmp;
  for (const auto& [p, c] : a.terms()) {
    tmp = amps_;
    kern::apply_pauli(tmp.data(), dim(), p.x_mask(), p.z_mask(), 0, backend_);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * tmp[i];
  }
  amps_ = std::move(acc);
}

double StateVector::norm() const {
  return std::sqrt(kern::norm2(amps_.data(), dim(), backend_));
}

void StateVector::normalize() {
  const double n = norm();
  if (n < 1e-300) throw NumericalError("cannot normalize a null state");
  kern::scale(amps_.data(), dim(), 1.0 / n, backend_);
}

cplx StateVector::inner(const StateVector& other) const {
  if (other.n_ != n_) throw DimensionError("state size mismatch");
  return kern::inner(amps_.data(), other.amps_.data(), dim(), backend_);
}

cplx StateVector::expectation(const PauliString& p) const {
  if (p.n_qubits() != n_) throw DimensionError("pauli size mismatch");
  return kern::expect_pauli(amps_.data(), dim(), p.x_mask(), p.z_mask(),
                            p.phase_power(), backend_);
}

cplx StateVector::expectation(const PauliSum& a) const {
  if (a.n_qubits() != n_) throw DimensionError("operator size mismatch");
  cplx s = 0.0;
  for (const auto& [p, c] : a.terms()) {
    s += c * kern::expect_pauli(amps_.data(), dim(), p.x_mask(), p.z_mask(), 0,
                                backend_);
  }
  return s;
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> out(amps_.size());
  kern::probabilities(amps_.data(), dim(), out.data(), backend_);
  return out;
}

double StateVector::postselect(const std::vector<int>& qubits,
                               const std::vector<int>& outcomes) {
  if (qubits.size() != outcomes.size()) throw ArgumentError("qubit/outcome count mismatch");
  std::uint64_t mask = 0, want = 0;
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    check_qubit(qubits[i]);
    const std::uint64_t bit = 1ULL << qubits[i];
    if (mask & bit) throw ArgumentError("post-selection qubits must be distinct");
    mask |= bit;
    if (outcomes[i]) want |= bit;
  }
  double kept = 0.0;
  for (std::uint64_t b = 0; b < amps_.size(); ++b) {
    if ((b & mask) == want) kept += std::norm(amps_[b]);
    else amps_[b] = 0.0;
  }
  if (kept < 1e-14) throw NumericalError("post-selection probability below 1e-14");
  kern::scale(amps_.data(), dim(), 1.0 / std::sqrt(kept), backend_);
  return kept;
}

std::vector<double> build_cdf(const std::vector<double>& probs) {
  std::vector<double> cdf(probs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    cdf[i] = acc;
  }
  if (!cdf.empty()) cdf.back() = std::max(cdf.back(), 1.0);
  return cdf;
}

std::uint64_t sample_index(const std::vector<double>& cdf, double u) {
  auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  if (it == cdf.end()) --it;
  return static_cast<std::uint64_t>(it - cdf.begin());
}

std::vector<std::uint64_t> StateVector::sample_bitstrings(std::uint64_t n_s,
                                                          std::uint64_t seed) const {
  const auto cdf = build_cdf(probabilities());
  CounterRng rng(seed);
  std::vector<std::uint64_t> out(n_s);
  for (std::uint64_t i = 0; i < n_s; ++i) out[i] = sample_index(cdf, rng.next_double());
  return out;
}

ShotEstimate StateVector::sample_pauli(const PauliString& p, std::uint64_t n_s,
                                       std::uint64_t seed) const {
  if (p.n_qubits() != n_) throw DimensionError("pauli size mismatch");
  if (n_s == 0) throw ArgumentError("shot count must be positive");
  if (p.phase_power() % 2 != 0) throw ArgumentError("cannot measure a non-Hermitian string");
  const double sign = p.phase_power() == 2 ? -1.0 : 1.0;

  StateVector rotated = *this;
  Circuit v(n_);
  append_basis_change(v, p);
  rotated.apply(v);

  const std::uint64_t support = p.x_mask() | p.z_mask();
  const auto samples = rotated.sample_bitstrings(n_s, seed);
  double sum = 0.0;
  for (std::uint64_t z : samples) {
    sum += (std::popcount(z & support) & 1) ? -1.0 : 1.0;
  }
  ShotEstimate est;
  est.mean = sign * sum / static_cast<double>(n_s);
  est.sigma = std::sqrt(std::max(0.0, (1.0 - est.mean * est.mean) /
                                          static_cast<double>(n_s)));
  est.shots = n_s;
  est.seed = seed;
  return est;
}

void append_basis_change(Circuit& c, const PauliString& p) {
  for (int q = 0; q < p.n_qubits(); ++q) {
    switch (p.letter(q)) {
      case 'X':
        c.add(Gate::single(GateKind::Had, q));
        break;
      case 'Y':
        // V with V^dagger Z V = Y: S^dagger then H.
        c.add(Gate::single(GateKind::Sdg, q));
        c.add(Gate::single(GateKind::Had, q));
        break;
      default:
        break;
    }
  }
}

Circuit pauli_rotation_ladder(const PauliString& p, double theta) {
  const int n = p.n_qubits();
  Circuit c(n);
  if (p.is_identity()) throw ArgumentError("ladder circuit needs a nontrivial string");

  std::vector<int> support;
  for (int q = 0; q < n; ++q) {
    if (p.letter(q) != 'I') support.push_back(q);
  }

  append_basis_change(c, p);
  for (std::size_t i = 0; i + 1 < support.size(); ++i) {
    c.add(Gate::cnot(support[i], support[i + 1]));
  }
  // Fold the string's (+/-1) phase into the rotation angle.
  double eff = theta;
  if (p.phase_power() == 2) eff = -theta;
  else if (p.phase_power() % 2 != 0) throw ArgumentError("non-Hermitian rotation string");
  c.add(Gate::single(GateKind::Rz, support.back(), eff));
  for (std::size_t i = support.size() - 1; i-- > 0;) {
    c.add(Gate::cnot(support[i], support[i + 1]));
  }
  // Undo the basis change (H and then S on Y qubits).
  for (int q = n - 1; q >= 0; --q) {
    switch (p.letter(q)) {
      case 'X':
        c.add(Gate::single(GateKind::Had, q));
        break;
      case 'Y':
        c.add(Gate::single(GateKind::Had, q));
        c.add(Gate::single(GateKind::S, q));
        break;
      default:
        break;
    }
  }
  return c;
}

}  // namespace qce
