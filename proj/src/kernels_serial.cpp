// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0
//
// Reference implementations of the amplitude-update kernels. Every parallel
// kernel in kernels_omp.cpp is tested against these.

#include <bit>

#include "qce/kernels.hpp"

namespace qce::kern {

namespace detail {

inline cplx pauli_entry_base(std::uint64_t x, std::uint64_t z, int phase_power) {
  static constexpr cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return ipow[((phase_power % 4) + 4) % 4] * ipow[std::popcount(x & z) % 4];
}

inline double z_sign(std::uint64_t z, std::uint64_t b) {
  return (std::popcount(z & b) & 1) ? -1.0 : 1.0;
}

}  // namespace detail

void apply_1q_serial(cplx* amps, std::int64_t dim, int target, const cplx m[4],
                     std::uint64_t control_mask) {
  const std::int64_t mask = 1LL << target;
  const std::int64_t lo = mask - 1;
  const std::int64_t hi = ~lo;
  const std::int64_t half = dim >> 1;
  for (std::int64_t i = 0; i < half; ++i) {
    const std::int64_t i0 = ((i & hi) << 1) | (i & lo);
    if ((static_cast<std::uint64_t>(i0) & control_mask) != control_mask) continue;
    const std::int64_t i1 = i0 | mask;
    const cplx a0 = amps[i0], a1 = amps[i1];
    amps[i0] = m[0] * a0 + m[1] * a1;
    amps[i1] = m[2] * a0 + m[3] * a1;
  }
}

void apply_dense_gate_serial(cplx* amps, std::int64_t dim,
                             const std::vector<int>& targets, const Matrix& matrix,
                             std::uint64_t control_mask) {
  const int k = static_cast<int>(targets.size());
  const std::int64_t sub = 1LL << k;
  std::uint64_t tmask = 0;
  for (int t : targets) tmask |= 1ULL << t;

  std::vector<cplx> in(sub), out(sub);
  for (std::int64_t base = 0; base < dim; ++base) {
    if (static_cast<std::uint64_t>(base) & tmask) continue;  // target bits zero
    if ((static_cast<std::uint64_t>(base) & control_mask) != control_mask) continue;
    for (std::int64_t j = 0; j < sub; ++j) {
      std::int64_t idx = base;
      for (int b = 0; b < k; ++b) {
        if ((j >> b) & 1) idx |= 1LL << targets[b];
      }
      in[j] = amps[idx];
    }
    for (std::int64_t r = 0; r < sub; ++r) {
      cplx acc = 0.0;
      for (std::int64_t c = 0; c < sub; ++c) acc += matrix(r, c) * in[c];
      out[r] = acc;
    }
    for (std::int64_t j = 0; j < sub; ++j) {
      std::int64_t idx = base;
      for (int b = 0; b < k; ++b) {
        if ((j >> b) & 1) idx |= 1LL << targets[b];
      }
      amps[idx] = out[j];
    }
  }
}

void apply_swap_serial(cplx* amps, std::int64_t dim, int q1, int q2,
                       std::uint64_t control_mask) {
  const std::int64_t m1 = 1LL << q1, m2 = 1LL << q2;
  for (std::int64_t i = 0; i < dim; ++i) {
    if ((i & m1) && !(i & m2)) {
      if ((static_cast<std::uint64_t>(i) & control_mask) != control_mask) continue;
      std::swap(amps[i], amps[(i ^ m1) | m2]);
    }
  }
}

void apply_pauli_serial(cplx* amps, std::int64_t dim, std::uint64_t x,
                        std::uint64_t z, int phase_power) {
  const cplx base = detail::pauli_entry_base(x, z, phase_power);
  if (x == 0) {
    for (std::int64_t b = 0; b < dim; ++b) {
      amps[b] *= base * detail::z_sign(z, static_cast<std::uint64_t>(b));
    }
    return;
  }
  const std::int64_t pair_bit = 1LL << std::countr_zero(x);
  for (std::int64_t b = 0; b < dim; ++b) {
    if (b & pair_bit) continue;
    const std::int64_t b2 = b ^ static_cast<std::int64_t>(x);
    // P|b> = base * (-1)^{z.b} |b^x|
    const cplx vb = amps[b], vb2 = amps[b2];
    amps[b2] = base * detail::z_sign(z, static_cast<std::uint64_t>(b)) * vb;
    amps[b] = base * detail::z_sign(z, static_cast<std::uint64_t>(b2)) * vb2;
  }
}

void apply_pauli_rotation_serial(cplx* amps, std::int64_t dim, std::uint64_t x,
                                 std::uint64_t z, int phase_power, double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  const cplx mis(0, -s);
  const cplx base = detail::pauli_entry_base(x, z, phase_power);
  if (x == 0) {
    for (std::int64_t b = 0; b < dim; ++b) {
      amps[b] *= c + mis * base * detail::z_sign(z, static_cast<std::uint64_t>(b));
    }
    return;
  }
  const std::int64_t pair_bit = 1LL << std::countr_zero(x);
  for (std::int64_t b = 0; b < dim; ++b) {
    if (b & pair_bit) continue;
    const std::int64_t b2 = b ^ static_cast<std::int64_t>(x);
    const cplx vb = amps[b], vb2 = amps[b2];
    amps[b] = c * vb + mis * base * detail::z_sign(z, static_cast<std::uint64_t>(b2)) * vb2;
    amps[b2] = c * vb2 + mis * base * detail::z_sign(z, static_cast<std::uint64_t>(b)) * vb;
  }
}

void scale_serial(cplx* amps, std::int64_t dim, cplx factor) {
  for (std::int64_t i = 0; i < dim; ++i) amps[i] *= factor;
}

double norm2_serial(const cplx* amps, std::int64_t dim) {
  double s = 0.0;
  for (std::int64_t i = 0; i < dim; ++i) s += std::norm(amps[i]);
  return s;
}

cplx inner_serial(const cplx* a, const cplx* b, std::int64_t dim) {
  cplx s = 0.0;
  for (std::int64_t i = 0; i < dim; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

cplx expect_pauli_serial(const cplx* amps, std::int64_t dim, std::uint64_t x,
                         std::uint64_t z, int phase_power) {
  const cplx base = detail::pauli_entry_base(x, z, phase_power);
  cplx s = 0.0;
  for (std::int64_t b = 0; b < dim; ++b) {
    const std::int64_t b2 = b ^ static_cast<std::int64_t>(x);
    s += std::conj(amps[b]) * base * detail::z_sign(z, static_cast<std::uint64_t>(b2)) *
         amps[b2];
  }
  return s;
}

void probabilities_serial(const cplx* amps, std::int64_t dim, double* out) {
  for (std::int64_t i = 0; i < dim; ++i) out[i] = std::norm(amps[i]);
}

}  // namespace qce::kern
