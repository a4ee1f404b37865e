// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#include "qce/phase.hpp"

#include <cmath>
#include <map>

#include "qce/fermion.hpp"

namespace qce {

namespace {

Matrix qft_matrix(int t) {
  const std::int64_t dim = 1LL << t;
  Matrix f(dim, dim);
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::int64_t j = 0; j < dim; ++j) {
    for (std::int64_t k = 0; k < dim; ++k) {
      f(j, k) = norm * std::exp(cplx(0, 6.283185307179586 * j * k / dim));
    }
  }
  return f;
}

}  // namespace

std::vector<double> qpe_reference_distribution(double theta, int t_ancillae) {
  const std::int64_t dim = 1LL << t_ancillae;
  std::vector<double> p(dim);
  for (std::int64_t z = 0; z < dim; ++z) {
    cplx acc = 0.0;
    for (std::int64_t k = 0; k < dim; ++k) {
      acc += std::exp(cplx(0, 6.283185307179586 * k * (theta - static_cast<double>(z) / dim)));
    }
    p[z] = std::norm(acc) / (static_cast<double>(dim) * dim);
  }
  return p;
}

QpeResult qpe_unitary(const Matrix& u, const StateVector& state, int t_ancillae,
                      std::uint64_t shots, std::uint64_t seed) {
  const int n = state.n_qubits();
  if (t_ancillae < 1) throw ArgumentError("need at least one ancilla");
  if (n + t_ancillae > kDenseCap + 8) {
    throw ResourceError("phase estimation register exceeds the dense cap");
  }
  if (u.rows() != state.dim()) throw DimensionError("unitary size mismatch");

  StateVector joint(n + t_ancillae);
  {
    auto dst = joint.amplitudes();
    std::fill(dst.begin(), dst.end(), cplx(0, 0));
    const auto src = state.amplitudes();
    std::copy(src.begin(), src.end(), dst.begin());
  }
  std::vector<int> sys(n);
  for (int i = 0; i < n; ++i) sys[i] = i;

  Matrix upow = u;
  for (int j = 0; j < t_ancillae; ++j) {
    joint.apply(Gate::single(GateKind::Had, n + j));
    joint.apply(Gate::controlled_u({n + j}, sys, upow));
    if (j + 1 < t_ancillae) upow = upow * upow;
  }

  std::vector<int> anc(t_ancillae);
  for (int i = 0; i < t_ancillae; ++i) anc[i] = n + i;
  joint.apply(Gate::controlled_u({}, anc, Matrix(qft_matrix(t_ancillae).adjoint())));

  // exact ancilla marginal
  const std::int64_t sys_dim = 1LL << n;
  const std::int64_t anc_dim = 1LL << t_ancillae;
  QpeResult result;
  result.distribution.assign(anc_dim, 0.0);
  const auto amps = joint.amplitudes();
  for (std::int64_t z = 0; z < anc_dim; ++z) {
    double p = 0.0;
    for (std::int64_t s = 0; s < sys_dim; ++s) p += std::norm(amps[z * sys_dim + s]);
    result.distribution[z] = p;
  }

  result.shots = shots;
  result.seed = seed;
  if (shots > 0) {
    const auto samples = joint.sample_bitstrings(shots, seed);
    std::map<std::uint64_t, std::uint64_t> counts;
    for (auto s : samples) ++counts[s >> n];
    std::uint64_t best = 0, best_count = 0;
    for (const auto& [z, c] : counts) {
      if (c > best_count) {
        best = z;
        best_count = c;
      }
    }
    result.best_outcome = best;
    result.p_best = static_cast<double>(best_count) / static_cast<double>(shots);
  } else {
    std::int64_t best = 0;
    for (std::int64_t z = 1; z < anc_dim; ++z) {
      if (result.distribution[z] > result.distribution[best]) best = z;
    }
    result.best_outcome = static_cast<std::uint64_t>(best);
    result.p_best = result.distribution[best];
  }
  result.phase_estimate =
      static_cast<double>(result.best_outcome) / static_cast<double>(anc_dim);
  return result;
}

QpeEnergyResult qpe_hamiltonian(const PauliSum& h, const StateVector& state,
                                int t_ancillae, double e_lo, double e_hi,
                                std::uint64_t shots, std::uint64_t seed) {
  if (e_hi <= e_lo) throw ArgumentError("energy window must be increasing");
  // U = exp(2 pi i (H - e_lo)/(e_hi - e_lo)); phases in [0, 1) for
  // eigenvalues inside the window.
  const Matrix hd = to_dense(h);
  const double scale = 6.283185307179586 / (e_hi - e_lo);
  const Matrix u = expm_hermitian(
      Matrix(hd - e_lo * Matrix::Identity(hd.rows(), hd.cols())), cplx(0, scale));
  QpeEnergyResult out;
  out.qpe = qpe_unitary(u, state, t_ancillae, shots, seed);
  out.energy = e_lo + out.qpe.phase_estimate * (e_hi - e_lo);
  return out;
}

StateVector ground_state_vector(const PauliSum& h) {
  const auto [e, vec] = ground_state(to_dense(h));
  std::vector<cplx> amps(vec.data(), vec.data() + vec.size());
  return StateVector::from_amplitudes(h.n_qubits(), std::move(amps));
}

AspResult adiabatic_prepare(const PauliSum& h0, const PauliSum& h1,
                            const StateVector& psi0, double total_time,
                            int n_steps) {
  if (n_steps < 1) throw ArgumentError("step count must be positive");
  if (h0.n_qubits() != h1.n_qubits()) throw DimensionError("operator size mismatch");

  AspResult out;
  out.state = psi0;
  const double dt = total_time / n_steps;
  for (int j = 0; j < n_steps && total_time > 0; ++j) {
    const double s = (j + 0.5) / n_steps;
    PauliSum hs = h0;
    PauliSum scaled = h1;
    scaled *= s;
    hs += scaled;
    out.state.apply(trotter_step_circuit(hs, dt, 2));
  }

  // gap profile, sampled densely
  out.min_gap = 1e300;
  const int samples = 16;
  for (int k = 0; k <= samples; ++k) {
    const double s = static_cast<double>(k) / samples;
    PauliSum hs = h0;
    PauliSum scaled = h1;
    scaled *= s;
    hs += scaled;
    const auto eigs = eigenvalues_hermitian(to_dense(hs));
    if (eigs.size() > 1) out.min_gap = std::min(out.min_gap, eigs[1] - eigs[0]);
  }
  out.gap_warning = out.min_gap < 1e-6;

  PauliSum h_final = h0;
  h_final += h1;
  const StateVector gs = ground_state_vector(h_final);
  out.overlap = std::norm(out.state.inner(gs));
  return out;
}

PauliSum molecular_initial_hamiltonian(const MolecularIntegrals& ints) {
  const int n = ints.n_spatial();
  const int n_occ = ints.n_electrons() / 2;
  if (ints.n_electrons() % 2 != 0) {
    throw ArgumentError("closed-shell reference requires an even electron count");
  }
  // Fock matrix in the stored MO basis: F = h + sum_occ [2 (pr|ii) - (pi|ir)].
  FermionOperator fock(2 * n);
  for (int p = 0; p < n; ++p) {
    for (int r = 0; r < n; ++r) {
      double f = ints.h(p, r);
      for (int i = 0; i < n_occ; ++i) {
        f += 2.0 * ints.eri(p, r, i, i) - ints.eri(p, i, i, r);
      }
      if (f == 0.0) continue;
      for (int spin = 0; spin < 2; ++spin) {
        fock.add_term({{p + spin * n, true}, {r + spin * n, false}}, f);
      }
    }
  }
  const PauliSum fock_q = jordan_wigner(fock);
  const PauliSum h_q = jordan_wigner(build_molecular_hamiltonian(ints));

  const StateVector hf = hartree_fock_state(n, ints.n_electrons());
  const double shift = (hf.expectation(h_q) - hf.expectation(fock_q)).real();
  PauliSum out = fock_q;
  out += PauliSum::identity(2 * n, shift);
  return out;
}

StateVector hartree_fock_state(int n_spatial, int n_electrons) {
  const int n_alpha = (n_electrons + 1) / 2;
  const int n_beta = n_electrons / 2;
  std::uint64_t bits = 0;
  for (int i = 0; i < n_alpha; ++i) bits |= 1ULL << i;
  for (int i = 0; i < n_beta; ++i) bits |= 1ULL << (n_spatial + i);
  return StateVector(2 * n_spatial, bits);
}

namespace {

// Controlled application of a Pauli string on the system half of an
// ancilla-extended register (ancilla = top qubit).
void apply_controlled_pauli(StateVector& joint, const PauliString& p) {
  const std::int64_t sys_dim = 1LL << p.n_qubits();
  auto amps = joint.amplitudes();
  kern::apply_pauli(amps.data() + sys_dim, sys_dim, p.x_mask(), p.z_mask(),
                    p.phase_power(), joint.backend());
}

}  // namespace

CorrelationResult correlation_function(const PauliSum& h, const PauliSum& a,
                                       const PauliSum& b, const StateVector& psi0,
                                       double e0, const std::vector<double>& times) {
  if (times.empty()) throw ArgumentError("empty time grid");
  const int n = psi0.n_qubits();
  if (a.n_qubits() != n || b.n_qubits() != n || h.n_qubits() != n) {
    throw DimensionError("operator size mismatch");
  }

  CorrelationResult out;
  out.times = times;

  // dense path: eigenbasis propagation of B|psi0>
  Eigen::SelfAdjointEigenSolver<Matrix> es(to_dense(h));
  Vector phi(psi0.dim());
  {
    StateVector bpsi = psi0;
    bpsi.apply_operator(b);
    for (std::int64_t i = 0; i < bpsi.dim(); ++i) phi(i) = bpsi.amplitudes()[i];
  }
  Vector apsi(psi0.dim());
  {
    StateVector tmp = psi0;
    tmp.apply_operator(a.adjoint());
    for (std::int64_t i = 0; i < tmp.dim(); ++i) apsi(i) = tmp.amplitudes()[i];
  }
  const Vector phi_e = es.eigenvectors().adjoint() * phi;
  const Vector apsi_e = es.eigenvectors().adjoint() * apsi;
  for (double t : times) {
    cplx c = 0.0;
    for (Eigen::Index k = 0; k < phi_e.size(); ++k) {
      c += std::conj(apsi_e(k)) * phi_e(k) *
           std::exp(cplx(0, -(es.eigenvalues()(k) - e0) * t));
    }
    out.dense_path.push_back(c);
  }

  // circuit path: ancilla Hadamard test with controlled Pauli terms and the
  // uncontrolled propagator, 2 <S_-> = <X> + i <Y> per term pair
  const std::vector<int> sys_targets = [&]() {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
  }();
  for (double t : times) {
    const Matrix u = expm_hermitian(to_dense(h), cplx(0, -t));
    cplx c = 0.0;
    for (const auto& [pb, cb] : b.terms()) {
      for (const auto& [pa, ca] : a.terms()) {
        StateVector joint(n + 1);
        {
          auto dst = joint.amplitudes();
          std::fill(dst.begin(), dst.end(), cplx(0, 0));
          const auto src = psi0.amplitudes();
          std::copy(src.begin(), src.end(), dst.begin());
        }
        joint.apply(Gate::single(GateKind::Had, n));
        apply_controlled_pauli(joint, pb);
        joint.apply(Gate::controlled_u({}, sys_targets, u));
        apply_controlled_pauli(joint, pa);
        const double re = joint.expectation(PauliString::single(n + 1, n, 'X')).real();
        const double im = joint.expectation(PauliString::single(n + 1, n, 'Y')).real();
        c += ca * cb * cplx(re, im);
      }
    }
    // <psi0|U^dag A U B|psi0> equals C(t) when psi0 is the eigenstate with
    // energy e0, the regime the measurement circuit is defined for.
    out.circuit_path.push_back(c);
  }

  // discrete Fourier transform on a uniform grid: S(w_k) with peaks at the
  // excitation energies E_f - E0
  if (times.size() > 1) {
    const double dt = times[1] - times[0];
    for (std::size_t i = 1; i + 1 < times.size(); ++i) {
      if (std::abs((times[i + 1] - times[i]) - dt) > 1e-9 * std::max(1.0, std::abs(dt))) {
        throw ArgumentError("spectral transform needs a uniform time grid");
      }
    }
    const auto m = static_cast<std::int64_t>(times.size());
    for (std::int64_t k = 0; k < m; ++k) {
      const double w = 6.283185307179586 * k / (m * dt);
      cplx s = 0.0;
      for (std::int64_t j = 0; j < m; ++j) {
        s += out.dense_path[j] * std::exp(cplx(0, w * times[j]));
      }
      out.omegas.push_back(w);
      out.spectral.push_back(std::abs(s) / m);
    }
  }
  return out;
}

}  // namespace qce
