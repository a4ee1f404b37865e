// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#include "qce/density.hpp"

#include <bit>
#include <cmath>

namespace qce {

KrausChannel::KrausChannel(std::vector<int> t, std::vector<Matrix> ops)
    : targets(std::move(t)), operators(std::move(ops)) {
  if (operators.empty()) throw ChannelError("empty Kraus set");
  const std::int64_t sub = 1LL << targets.size();
  Matrix sum = Matrix::Zero(sub, sub);
  for (const auto& k : operators) {
    if (k.rows() != sub || k.cols() != sub) throw ChannelError("Kraus size mismatch");
    sum += k.adjoint() * k;
  }
  if ((sum - Matrix::Identity(sub, sub)).cwiseAbs().maxCoeff() > 1e-10) {
    throw ChannelError("Kraus set is not trace preserving");
  }
}

namespace channels {

KrausChannel depolarizing(int qubit, double p) {
  if (p < 0 || p > 1) throw ArgumentError("depolarizing rate must be in [0,1]");
  const double k0 = std::sqrt(1.0 - 0.75 * p), kp = std::sqrt(0.25 * p);
  return {{qubit},
          {k0 * mats::identity2(), kp * mats::x(), kp * mats::y(), kp * mats::z()}};
}

KrausChannel amplitude_damping(int qubit, double gamma) {
  if (gamma < 0 || gamma > 1) throw ArgumentError("damping rate must be in [0,1]");
  Matrix k0(2, 2), k1(2, 2);
  k0 << 1, 0, 0, std::sqrt(1.0 - gamma);
  k1 << 0, std::sqrt(gamma), 0, 0;
  return {{qubit}, {k0, k1}};
}

KrausChannel phase_damping(int qubit, double gamma) {
  if (gamma < 0 || gamma > 1) throw ArgumentError("damping rate must be in [0,1]");
  Matrix k0(2, 2), k1(2, 2);
  k0 << 1, 0, 0, std::sqrt(1.0 - gamma);
  k1 << 0, 0, 0, std::sqrt(gamma);
  return {{qubit}, {k0, k1}};
}

}  // namespace channels

DensityMatrix::DensityMatrix(int n_qubits, std::uint64_t basis_state)
    : n_(n_qubits), backend_(kern::default_backend()) {
  if (n_qubits < 0 || n_qubits > kDensityCap) {
    throw ResourceError("density matrix of " + std::to_string(n_qubits) +
                        " qubits exceeds cap " + std::to_string(kDensityCap));
  }
  vec_.assign(1ULL << (2 * n_qubits), 0.0);
  vec_[basis_state + (basis_state << n_)] = 1.0;
}

DensityMatrix DensityMatrix::from_state(const StateVector& s) {
  DensityMatrix rho(s.n_qubits());
  const auto amps = s.amplitudes();
  const std::int64_t d = s.dim();
  for (std::int64_t j = 0; j < d; ++j) {
    for (std::int64_t i = 0; i < d; ++i) {
      rho.vec_[i + (j << rho.n_)] = amps[i] * std::conj(amps[j]);
    }
  }
  return rho;
}

DensityMatrix DensityMatrix::from_matrix(int n_qubits, const Matrix& m) {
  DensityMatrix rho(n_qubits);
  const std::int64_t d = rho.dim();
  if (m.rows() != d || m.cols() != d) throw DimensionError("density size mismatch");
  for (std::int64_t j = 0; j < d; ++j) {
    for (std::int64_t i = 0; i < d; ++i) rho.vec_[i + (j << n_qubits)] = m(i, j);
  }
  return rho;
}

void DensityMatrix::apply_one_side(const Gate& g, int shift, bool conjugate) {
  const std::int64_t vdim = static_cast<std::int64_t>(vec_.size());
  std::uint64_t cmask = 0;
  for (int c : g.controls) cmask |= 1ULL << (c + shift);

  if (g.kind == GateKind::PauliRotation) {
    const auto& p = g.pauli;
    const std::uint64_t x = p.x_mask() << shift, z = p.z_mask() << shift;
    double theta = g.angle;
    if (p.phase_power() == 2) theta = -theta;
    else if (p.phase_power() % 2 != 0) throw ArgumentError("non-Hermitian rotation");
    if (conjugate) {
      // conj(exp(-i a/2 P)) = exp(+i a/2 conj(P)), conj(P) = (-1)^{|x&z|} P.
      theta = -theta;
      if (std::popcount(p.x_mask() & p.z_mask()) & 1) theta = -theta;
    }
    if (x == 0 && z == 0) {
      kern::scale(vec_.data(), vdim, std::exp(cplx(0, -theta / 2)), backend_);
    } else {
      kern::apply_pauli_rotation(vec_.data(), vdim, x, z, 0, theta, backend_);
    }
    return;
  }
  if (g.kind == GateKind::Swap) {
    kern::apply_swap(vec_.data(), vdim, g.targets[0] + shift, g.targets[1] + shift,
                     cmask, backend_);
    return;
  }
  Matrix u = g.target_matrix();
  if (conjugate) u = u.conjugate();
  std::vector<int> targets;
  targets.reserve(g.targets.size());
  for (int t : g.targets) targets.push_back(t + shift);
  if (targets.size() == 1) {
    const cplx m[4] = {u(0, 0), u(0, 1), u(1, 0), u(1, 1)};
    kern::apply_1q(vec_.data(), vdim, targets[0], m, cmask, backend_);
  } else {
    kern::apply_dense_gate(vec_.data(), vdim, targets, u, cmask, backend_);
  }
}

void DensityMatrix::apply(const Gate& g) {
  if (g.is_parametric()) throw ArgumentError("cannot apply an unbound gate");
  for (int q : g.targets) check_qubit(q);
  for (int q : g.controls) check_qubit(q);
  if (g.kind == GateKind::PauliRotation && g.pauli.n_qubits() != n_) {
    throw DimensionError("pauli rotation size mismatch");
  }
  apply_one_side(g, 0, false);   // K on the ket side
  apply_one_side(g, n_, true);   // conj(K) on the bra side
}

void DensityMatrix::apply(const Circuit& c) {
  if (c.n_qubits() != n_) throw DimensionError("circuit size mismatch");
  for (const auto& g : c.gates()) apply(g);
}

void DensityMatrix::apply_channel(const KrausChannel& ch) {
  for (int q : ch.targets) check_qubit(q);
  std::vector<cplx> acc(vec_.size(), 0.0);
  std::vector<cplx> tmp;
  for (const auto& k : ch.operators) {
    tmp = vec_;
    const std::int64_t vdim = static_cast<std::int64_t>(tmp.size());
    std::vector<int> ket = ch.targets, bra;
    for (int q : ch.targets) bra.push_back(q + n_);
    if (ket.size() == 1) {
      const cplx mk[4] = {k(0, 0), k(0, 1), k(1, 0), k(1, 1)};
      const Matrix kc = k.conjugate();
      const cplx mb[4] = {kc(0, 0), kc(0, 1), kc(1, 0), kc(1, 1)};
      kern::apply_1q(tmp.data(), vdim, ket[0], mk, 0, backend_);
      kern::apply_1q(tmp.data(), vdim, bra[0], mb, 0, backend_);
    } else {
      kern::apply_dense_gate(tmp.data(), vdim, ket, k, 0, backend_);
      kern::apply_dense_gate(tmp.data(), vdim, bra, k.conjugate(), 0, backend_);
    }
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += tmp[i];
  }
  vec_ = std::move(acc);
}

cplx DensityMatrix::trace() const {
  cplx t = 0.0;
  const std::int64_t d = dim();
  for (std::int64_t i = 0; i < d; ++i) t += vec_[i + (i << n_)];
  return t;
}

double DensityMatrix::purity() const {
  // Tr rho^2 = sum_ij rho_ij rho_ji = sum |rho_ij|^2 for Hermitian rho.
  double s = 0.0;
  for (const auto& v : vec_) s += std::norm(v);
  return s;
}

cplx DensityMatrix::expectation(const PauliString& p) const {
  if (p.n_qubits() != n_) throw DimensionError("pauli size mismatch");
  // Tr(rho P) = sum_b rho_{b, b^x} phi(b) with P|b> = phi(b)|b^x>.
  static constexpr cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const std::uint64_t x = p.x_mask(), z = p.z_mask();
  const cplx base =
      p.phase() * ipow[std::popcount(x & z) % 4];
  cplx s = 0.0;
  const std::int64_t d = dim();
  for (std::int64_t b = 0; b < d; ++b) {
    const std::int64_t bx = b ^ static_cast<std::int64_t>(x);
    const double sign = (std::popcount(z & static_cast<std::uint64_t>(b)) & 1) ? -1.0 : 1.0;
    s += vec_[b + (bx << n_)] * base * sign;
  }
  return s;
}

cplx DensityMatrix::expectation(const PauliSum& a) const {
  if (a.n_qubits() != n_) throw DimensionError("operator size mismatch");
  cplx s = 0.0;
  for (const auto& [p, c] : a.terms()) s += c * expectation(p);
  return s;
}

std::vector<double> DensityMatrix::probabilities() const {
  const std::int64_t d = dim();
  std::vector<double> out(d);
  for (std::int64_t i = 0; i < d; ++i) out[i] = std::max(0.0, vec_[i + (i << n_)].real());
  return out;
}

std::vector<std::uint64_t> DensityMatrix::sample_bitstrings(std::uint64_t n_s,
                                                            std::uint64_t seed) const {
  auto probs = probabilities();
  double total = 0.0;
  for (double p : probs) total += p;
  for (double& p : probs) p /= total;
  const auto cdf = build_cdf(probs);
  CounterRng rng(seed);
  std::vector<std::uint64_t> out(n_s);
  for (std::uint64_t i = 0; i < n_s; ++i) out[i] = sample_index(cdf, rng.next_double());
  return out;
}

Matrix DensityMatrix::to_matrix() const {
  const std::int64_t d = dim();
  Matrix m(d, d);
  for (std::int64_t j = 0; j < d; ++j) {
    for (std::int64_t i = 0; i < d; ++i) m(i, j) = vec_[i + (j << n_)];
  }
  return m;
}

double DensityMatrix::hermiticity_error() const {
  const std::int64_t d = dim();
  double e = 0.0;
  for (std::int64_t j = 0; j < d; ++j) {
    for (std::int64_t i = 0; i <= j; ++i) {
      e = std::max(e, std::abs(vec_[i + (j << n_)] - std::conj(vec_[j + (i << n_)])));
    }
  }
  return e;
}

}  // namespace qce
