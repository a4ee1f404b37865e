// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0
//
// OpenMP kernels plus the backend dispatchers. Reductions use static
// scheduling so repeated runs with a fixed thread count stay bit-identical.

#include <bit>

#include <omp.h>

#include "qce/kernels.hpp"

namespace qce::kern {

// kernels_serial.cpp
void apply_1q_serial(cplx*, std::int64_t, int, const cplx[4], std::uint64_t);
void apply_dense_gate_serial(cplx*, std::int64_t, const std::vector<int>&,
                             const Matrix&, std::uint64_t);
void apply_swap_serial(cplx*, std::int64_t, int, int, std::uint64_t);
void apply_pauli_serial(cplx*, std::int64_t, std::uint64_t, std::uint64_t, int);
void apply_pauli_rotation_serial(cplx*, std::int64_t, std::uint64_t, std::uint64_t,
                                 int, double);
void scale_serial(cplx*, std::int64_t, cplx);
double norm2_serial(const cplx*, std::int64_t);
cplx inner_serial(const cplx*, const cplx*, std::int64_t);
cplx expect_pauli_serial(const cplx*, std::int64_t, std::uint64_t, std::uint64_t, int);
void probabilities_serial(const cplx*, std::int64_t, double*);

namespace detail {
cplx pauli_entry_base(std::uint64_t x, std::uint64_t z, int phase_power);
double z_sign(std::uint64_t z, std::uint64_t b);
}  // namespace detail

namespace {

Backend g_default = Backend::parallel;

namespace detail_omp {

inline cplx pauli_base(std::uint64_t x, std::uint64_t z, int phase_power) {
  static constexpr cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return ipow[((phase_power % 4) + 4) % 4] * ipow[std::popcount(x & z) % 4];
}

inline double z_sign(std::uint64_t z, std::uint64_t b) {
  return (std::popcount(z & b) & 1) ? -1.0 : 1.0;
}

void apply_1q(cplx* amps, std::int64_t dim, int target, const cplx m[4],
              std::uint64_t control_mask) {
  const std::int64_t mask = 1LL << target;
  const std::int64_t lo = mask - 1;
  const std::int64_t hi = ~lo;
  const std::int64_t half = dim >> 1;
  const cplx m00 = m[0], m01 = m[1], m10 = m[2], m11 = m[3];
#pragma omp parallel for schedule(static) if (dim >= kOmpMin)
  for (std::int64_t i = 0; i < half; ++i) {
    const std::int64_t i0 = ((i & hi) << 1) | (i & lo);
    if ((static_cast<std::uint64_t>(i0) & control_mask) != control_mask) continue;
    const std::int64_t i1 = i0 | mask;
    const cplx a0 = amps[i0], a1 = amps[i1];
    amps[i0] = m00 * a0 + m01 * a1;
    amps[i1] = m10 * a0 + m11 * a1;
  }
}

void apply_dense_gate(cplx* amps, std::int64_t dim, const std::vector<int>& targets,
                      const Matrix& matrix, std::uint64_t control_mask) {
  const int k = static_cast<int>(targets.size());
  const std::int64_t sub = 1LL << k;
  std::uint64_t tmask = 0;
  for (int t : targets) tmask |= 1ULL << t;

#pragma omp parallel if (dim >= kOmpMin)
  {
    std::vector<cplx> in(sub), out(sub);
    std::vector<std::int64_t> idx(sub);
#pragma omp for schedule(static)
    for (std::int64_t base = 0; base < dim; ++base) {
      if (static_cast<std::uint64_t>(base) & tmask) continue;
      if ((static_cast<std::uint64_t>(base) & control_mask) != control_mask) continue;
      for (std::int64_t j = 0; j < sub; ++j) {
        std::int64_t id = base;
        for (int b = 0; b < k; ++b) {
          if ((j >> b) & 1) id |= 1LL << targets[b];
        }
        idx[j] = id;
        in[j] = amps[id];
      }
      for (std::int64_t r = 0; r < sub; ++r) {
        cplx acc = 0.0;
        for (std::int64_t c = 0; c < sub; ++c) acc += matrix(r, c) * in[c];
        out[r] = acc;
      }
      for (std::int64_t j = 0; j < sub; ++j) amps[idx[j]] = out[j];
    }
  }
}

void apply_swap(cplx* amps, std::int64_t dim, int q1, int q2,
                std::uint64_t control_mask) {
  const std::int64_t m1 = 1LL << q1, m2 = 1LL << q2;
#pragma omp parallel for schedule(static) if (dim >= kOmpMin)
  for (std::int64_t i = 0; i < dim; ++i) {
    if ((i & m1) && !(i & m2)) {
      if ((static_cast<std::uint64_t>(i) & control_mask) != control_mask) continue;
      std::swap(amps[i], amps[(i ^ m1) | m2]);
    }
  }
}

void apply_pauli(cplx* amps, std::int64_t dim, std::uint64_t x, std::uint64_t z,
                 int phase_power) {
  const cplx base = pauli_base(x, z, phase_power);
  if (x == 0) {
#pragma omp parallel for schedule(static) if (dim >= kOmpMin)
    for (std::int64_t b = 0; b < dim; ++b) {
      amps[b] *= base * z_sign(z, static_cast<std::uint64_t>(b));
    }
    return;
  }
  const std::int64_t pair_bit = 1LL << std::countr_zero(x);
#pragma omp parallel for schedule(static) if (dim >= kOmpMin)
  for (std::int64_t b = 0; b < dim; ++b) {
    if (b & pair_bit) continue;
    const std::int64_t b2 = b ^ static_cast<std::int64_t>(x);
    const cplx vb = amps[b], vb2 = amps[b2];
    amps[b2] = base * z_sign(z, static_cast<std::uint64_t>(b)) * vb;
    amps[b] = base * z_sign(z, static_cast<std::uint64_t>(b2)) * vb2;
  }
}

void apply_pauli_rotation(cplx* amps, std::int64_t dim, std::uint64_t x,
                          std::uint64_t z, int phase_power, double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  const cplx mis(0, -s);
  const cplx base = pauli_base(x, z, phase_power);
  if (x == 0) {
#pragma omp parallel for schedule(static) if (dim >= kOmpMin)
    for (std::int64_t b = 0; b < dim; ++b) {
      amps[b] *= c + mis * base * z_sign(z, static_cast<std::uint64_t>(b));
    }
    return;
  }
  const std::int64_t pair_bit = 1LL << std::countr_zero(x);
#pragma omp parallel for schedule(static) if (dim >= kOmpMin)
  for (std::int64_t b = 0; b < dim; ++b) {
    if (b & pair_bit) continue;
    const std::int64_t b2 = b ^ static_cast<std::int64_t>(x);
    const cplx vb = amps[b], vb2 = amps[b2];
    amps[b] = c * vb + mis * base * z_sign(z, static_cast<std::uint64_t>(b2)) * vb2;
    amps[b2] = c * vb2 + mis * base * z_sign(z, static_cast<std::uint64_t>(b)) * vb;
  }
}

void scale(cplx* amps, std::int64_t dim, cplx factor) {
#pragma omp parallel for schedule(static) if (dim >= kOmpMin)
  for (std::int64_t i = 0; i < dim; ++i) amps[i] *= factor;
}

double norm2(const cplx* amps, std::int64_t dim) {
  double s = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : s) if (dim >= kOmpMin)
  for (std::int64_t i = 0; i < dim; ++i) s += std::norm(amps[i]);
  return s;
}

cplx inner(const cplx* a, const cplx* b, std::int64_t dim) {
  double re = 0.0, im = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : re, im) if (dim >= kOmpMin)
  for (std::int64_t i = 0; i < dim; ++i) {
    const cplx v = std::conj(a[i]) * b[i];
    re += v.real();
    im += v.imag();
  }
  return {re, im};
}

cplx expect_pauli(const cplx* amps, std::int64_t dim, std::uint64_t x,
                  std::uint64_t z, int phase_power) {
  const cplx base = pauli_base(x, z, phase_power);
  double re = 0.0, im = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : re, im) if (dim >= kOmpMin)
  for (std::int64_t b = 0; b < dim; ++b) {
    const std::int64_t b2 = b ^ static_cast<std::int64_t>(x);
    const cplx v = std::conj(amps[b]) * base *
                   z_sign(z, static_cast<std::uint64_t>(b2)) * amps[b2];
    re += v.real();
    im += v.imag();
  }
  return {re, im};
}

void probabilities(const cplx* amps, std::int64_t dim, double* out) {
#pragma omp parallel for schedule(static) if (dim >= kOmpMin)
  for (std::int64_t i = 0; i < dim; ++i) out[i] = std::norm(amps[i]);
}

}  // namespace detail_omp

}  // namespace

Backend default_backend() { return g_default; }
void set_default_backend(Backend b) { g_default = b; }

void apply_1q(cplx* amps, std::int64_t dim, int target, const cplx m[4],
              std::uint64_t control_mask, Backend backend) {
  if (backend == Backend::serial) apply_1q_serial(amps, dim, target, m, control_mask);
  else detail_omp::apply_1q(amps, dim, target, m, control_mask);
}

void apply_dense_gate(cplx* amps, std::int64_t dim, const std::vector<int>& targets,
                      const Matrix& matrix, std::uint64_t control_mask,
                      Backend backend) {
  if (backend == Backend::serial) {
    apply_dense_gate_serial(amps, dim, targets, matrix, control_mask);
  } else {
    detail_omp::apply_dense_gate(amps, dim, targets, matrix, control_mask);
  }
}

void apply_swap(cplx* amps, std::int64_t dim, int q1, int q2,
                std::uint64_t control_mask, Backend backend) {
  if (backend == Backend::serial) apply_swap_serial(amps, dim, q1, q2, control_mask);
  else detail_omp::apply_swap(amps, dim, q1, q2, control_mask);
}

void apply_pauli(cplx* amps, std::int64_t dim, std::uint64_t x, std::uint64_t z,
                 int phase_power, Backend backend) {
  if (backend == Backend::serial) apply_pauli_serial(amps, dim, x, z, phase_power);
  else detail_omp::apply_pauli(amps, dim, x, z, phase_power);
}

void apply_pauli_rotation(cplx* amps, std::int64_t dim, std::uint64_t x,
                          std::uint64_t z, int phase_power, double theta,
                          Backend backend) {
  if (backend == Backend::serial) {
    apply_pauli_rotation_serial(amps, dim, x, z, phase_power, theta);
  } else {
    detail_omp::apply_pauli_rotation(amps, dim, x, z, phase_power, theta);
  }
}

void scale(cplx* amps, std::int64_t dim, cplx factor, Backend backend) {
  if (backend == Backend::serial) scale_serial(amps, dim, factor);
  else detail_omp::scale(amps, dim, factor);
}

double norm2(const cplx* amps, std::int64_t dim, Backend backend) {
  return backend == Backend::serial ? norm2_serial(amps, dim)
                                    : detail_omp::norm2(amps, dim);
}

cplx inner(const cplx* a, const cplx* b, std::int64_t dim, Backend backend) {
  return backend == Backend::serial ? inner_serial(a, b, dim)
                                    : detail_omp::inner(a, b, dim);
}

cplx expect_pauli(const cplx* amps, std::int64_t dim, std::uint64_t x,
                  std::uint64_t z, int phase_power, Backend backend) {
  return backend == Backend::serial
             ? expect_pauli_serial(amps, dim, x, z, phase_power)
             : detail_omp::expect_pauli(amps, dim, x, z, phase_power);
}

void probabilities(const cplx* amps, std::int64_t dim, double* out, Backend backend) {
  if (backend == Backend::serial) probabilities_serial(amps, dim, out);
  else detail_omp::probabilities(amps, dim, out);
}

}  // namespace qce::kern
