// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qce/dense.hpp"
#include "qce/pauli.hpp"

namespace qce::kern {

/// Which amplitude-update implementation to run. The serial backend is the
/// reference; the parallel backend must agree with it bit-for-bit apart from
/// floating-point reduction order in inner products.
enum class Backend { serial, parallel };

Backend default_backend();
void set_default_backend(Backend b);

/// Minimum amplitude count before the parallel backend actually forks threads.
inline constexpr std::int64_t kOmpMin = 2048;

/// amps[i0], amps[i1] <- 2x2 matrix action on the target bit, restricted to
/// indices with all control-mask bits set. m is row-major {m00, m01, m10, m11}.
void apply_1q(cplx* amps, std::int64_t dim, int target, const cplx m[4],
              std::uint64_t control_mask, Backend backend);

/// Dense gate on k target qubits (targets[0] = least significant local bit).
/// matrix is 2^k x 2^k.
void apply_dense_gate(cplx* amps, std::int64_t dim, const std::vector<int>& targets,
                      const Matrix& matrix, std::uint64_t control_mask, Backend backend);

void apply_swap(cplx* amps, std::int64_t dim, int q1, int q2,
                std::uint64_t control_mask, Backend backend);

/// amps <- P amps for the Pauli string with the given masks and phase power.
void apply_pauli(cplx* amps, std::int64_t dim, std::uint64_t x, std::uint64_t z,
                 int phase_power, Backend backend);

/// amps <- exp(-i theta/2 P) amps, sparse two-point update.
void apply_pauli_rotation(cplx* amps, std::int64_t dim, std::uint64_t x,
                          std::uint64_t z, int phase_power, double theta,
                          Backend backend);

/// Multiplies every amplitude by a scalar.
void scale(cplx* amps, std::int64_t dim, cplx factor, Backend backend);

double norm2(const cplx* amps, std::int64_t dim, Backend backend);

cplx inner(const cplx* a, const cplx* b, std::int64_t dim, Backend backend);

/// <amps| P |amps> without materializing P amps.
cplx expect_pauli(const cplx* amps, std::int64_t dim, std::uint64_t x,
                  std::uint64_t z, int phase_power, Backend backend);

void probabilities(const cplx* amps, std::int64_t dim, double* out, Backend backend);

}  // namespace qce::kern
