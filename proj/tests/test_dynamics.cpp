// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "qce/hamio.hpp"
#include "qce/lcu.hpp"
#include "qce/phase.hpp"

using namespace qce;

namespace {

std::string fixture_path(const std::string& name) {
  return std::string(QCE_FIXTURE_DIR) + "/" + name;
}

PauliSum random_hermitian_sum(CounterRng& rng, int n, int terms) {
  PauliSum s(n);
  for (int i = 0; i < terms; ++i) {
    s.add_term(PauliString(n, rng.next_u64() & ((1ULL << n) - 1),
                           rng.next_u64() & ((1ULL << n) - 1)),
               rng.uniform(-1, 1));
  }
  return s;
}

StateVector random_state(CounterRng& rng, int n) {
  std::vector<cplx> amps(1ULL << n);
  for (auto& a : amps) a = {rng.normal(), rng.normal()};
  auto s = StateVector::from_amplitudes(n, std::move(amps));
  s.normalize();
  return s;
}

double state_distance(const StateVector& a, const StateVector& b) {
  double d = 0.0;
  for (std::int64_t i = 0; i < a.dim(); ++i) {
    d = std::max(d, std::abs(a.amplitudes()[i] - b.amplitudes()[i]));
  }
  return d;
}

}  // namespace

TEST_CASE("suzuki coefficient a2 = 1/(4 - 4^{1/3})") {
  CHECK(suzuki_coefficient(2) == doctest::Approx(0.4144907717943757).epsilon(1e-12));
}

TEST_CASE("commuting terms evolve exactly at one step, any order") {
  PauliSum h(3);
  h.add_term(PauliString::from_text("ZII"), 0.7);
  h.add_term(PauliString::from_text("IZI"), -0.4);
  h.add_term(PauliString::from_text("ZZZ"), 0.2);
  CounterRng rng(61);
  const auto psi = random_state(rng, 3);
  for (int order : {1, 2, 4}) {
    const auto rep = trotter_evolve(h, psi, 1.7, 1, order, true);
    CHECK(rep.measured_error < 1e-10);
  }
}

TEST_CASE("gamma for H = X + Z is 1") {
  PauliSum x(PauliString::from_text("X"), 1.0);
  PauliSum z(PauliString::from_text("Z"), 1.0);
  CHECK(trotter_gamma({x, z}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(trotter_error_bound({x, z}, 1.0, 10) == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("log-log error slopes match the formula order") {
  CounterRng rng(62);
  for (int trial = 0; trial < 3; ++trial) {
    const PauliSum h = random_hermitian_sum(rng, 4, 5);
    const auto psi = StateVector(4);
    const std::vector<double> steps = {4, 8, 16, 32};
    for (int order : {1, 2}) {
      std::vector<double> errs;
      for (double n : steps) {
        const auto rep =
            trotter_evolve(h, psi, 1.0, static_cast<int>(n), order, true);
        errs.push_back(rep.measured_error);
        if (order == 1) {
          CHECK(rep.measured_error <= rep.apriori_bound + 1e-10);
        }
      }
      const double slope = fitted_loglog_slope(steps, errs);
      CHECK(slope == doctest::Approx(-order).epsilon(0.1));
    }
  }
}

TEST_CASE("first-order bound dominates the measured error on random instances") {
  CounterRng rng(63);
  for (int trial = 0; trial < 50; ++trial) {
    const PauliSum h = random_hermitian_sum(rng, 3, 4);
    const auto rep = trotter_evolve(h, StateVector(3), 0.8,
                                    2 + static_cast<int>(rng.next_below(6)), 1, true);
    CHECK(rep.measured_error <= rep.apriori_bound + 1e-10);
  }
}

TEST_CASE("evolving an eigenstate reproduces its phase") {
  CounterRng rng(64);
  const PauliSum h = random_hermitian_sum(rng, 3, 5);
  Eigen::SelfAdjointEigenSolver<Matrix> es(to_dense(h));
  const int pick = 2;
  std::vector<cplx> amps(8);
  for (int i = 0; i < 8; ++i) amps[i] = es.eigenvectors().col(pick)(i);
  const auto eigenstate = StateVector::from_amplitudes(3, std::move(amps));

  const double t = 0.6;
  const auto rep = trotter_evolve(h, eigenstate, t, 64, 2, true);
  StateVector expected = eigenstate;
  const cplx phase = std::exp(cplx(0, -es.eigenvalues()(pick) * t));
  for (auto& a : expected.amplitudes()) a *= phase;
  CHECK(state_distance(rep.state, expected) <= rep.measured_error + 1e-10);
}

TEST_CASE("low-rank step is exact for diagonal Hamiltonians") {
  // number-operator-only integrals: h diagonal, (pp|qq) Coulomb terms
  MolecularIntegrals ints(2, 2, 0, 0.25);
  ints.set_h(0, 0, -0.9);
  ints.set_h(1, 1, -0.3);
  ints.set_eri(0, 0, 0, 0, 0.5);
  ints.set_eri(1, 1, 1, 1, 0.4);
  ints.set_eri(0, 0, 1, 1, 0.3);
  const auto fh = factorize_hamiltonian(ints, 1e-12);
  CounterRng rng(65);
  const auto psi = random_state(rng, 4);
  const auto rep = lowrank_trotter_evolve(fh, psi, 0.9, 1, true);
  CHECK(rep.measured_error < 1e-9);
}

TEST_CASE("low-rank step has first-order accuracy on the bundled fixture") {
  const auto ints = read_fcidump_file(fixture_path("h2_sto6g.fcidump"));
  const auto fh = factorize_hamiltonian(ints, 1e-10);
  const auto psi = StateVector(4);
  const std::vector<double> steps = {2, 4, 8, 16};
  std::vector<double> errs;
  for (double n : steps) {
    errs.push_back(
        lowrank_trotter_evolve(fh, psi, 1.0, static_cast<int>(n), true).measured_error);
  }
  CHECK(fitted_loglog_slope(steps, errs) == doctest::Approx(-1.0).epsilon(0.15));
}

TEST_CASE("low-rank step gate count scales as O(N_g M^2)") {
  const auto ints = read_fcidump_file(fixture_path("h2_sto6g.fcidump"));
  const auto fh = factorize_hamiltonian(ints, 1e-10);
  const auto c = lowrank_trotter_step(fh, 0.1);
  const int m = 2 * ints.n_spatial();
  const auto n_gamma = static_cast<int>(fh.pair_rotations.size());
  // generous structural budget: rotations + diagonal phases per factor
  CHECK(static_cast<int>(c.gates().size()) <= 8 * (n_gamma + 1) * m * m);
}

TEST_CASE("LCU with a single unitary succeeds with probability 1") {
  CounterRng rng(66);
  const auto psi = random_state(rng, 2);
  LCUDecomposition x;
  x.n_qubits = 2;
  x.alphas = {1.0};
  x.unitaries = {PauliString::from_text("XZ")};
  const auto res = lcu_apply(x, psi);
  CHECK(res.success_probability == doctest::Approx(1.0).epsilon(1e-12));
  StateVector expect = psi;
  expect.apply_pauli(PauliString::from_text("XZ"));
  CHECK(state_distance(res.state, expect) < 1e-12);
}

TEST_CASE("LCU projector (1+Z)/2 on |+> collapses to |0> with p = 1/2") {
  StateVector plus(1);
  plus.apply(Gate::single(GateKind::Had, 0));
  PauliSum proj(1);
  proj.add_term(PauliString(1), 0.5);
  proj.add_term(PauliString::from_text("Z"), 0.5);
  const auto res = lcu_apply(LCUDecomposition::from_pauli_sum(proj), plus);
  CHECK(res.success_probability == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(res.state.amplitude(0) - 1.0) < 1e-12);
}

TEST_CASE("random LCU application matches the dense operator") {
  CounterRng rng(67);
  for (int trial = 0; trial < 10; ++trial) {
    const PauliSum a = random_hermitian_sum(rng, 3, 4);
    if (a.empty()) continue;
    const auto psi = random_state(rng, 3);
    const auto res = lcu_apply(LCUDecomposition::from_pauli_sum(a), psi);

    Vector v(psi.dim());
    for (std::int64_t i = 0; i < psi.dim(); ++i) v(i) = psi.amplitudes()[i];
    Vector xv = to_dense(a) * v;
    const double norm = xv.norm();
    xv /= norm;
    double dist = 0.0;
    for (std::int64_t i = 0; i < psi.dim(); ++i) {
      dist = std::max(dist, std::abs(res.state.amplitudes()[i] - xv(i)));
    }
    CHECK(dist < 1e-10);
    const double alpha = a.one_norm();
    CHECK(res.success_probability ==
          doctest::Approx(norm * norm / (alpha * alpha)).epsilon(1e-10));
  }
}

TEST_CASE("LCU annihilation raises a numerical error") {
  StateVector zero(1);  // |0>
  PauliSum lower(1);    // S_- = (X + iY)/2 annihilates |0>
  lower.add_term(PauliString::from_text("X"), 0.5);
  lower.add_term(PauliString::from_text("Y"), cplx(0, 0.5));
  CHECK_THROWS_AS(lcu_apply(LCUDecomposition::from_pauli_sum(lower), zero),
                  NumericalError);
}

TEST_CASE("OAA follows the p_k = sin^2((2k+1) theta) law") {
  // X = e^{i phi P} padded with cancelling terms to reach alpha = 2, p = 1/4.
  const double phi = 0.7853981633974483;
  LCUDecomposition x;
  x.n_qubits = 2;
  const double beta = (2.0 - std::sqrt(2.0)) / 2.0;
  x.alphas = {std::cos(phi), std::sin(phi), beta, beta};
  x.unitaries = {PauliString(2),
                 PauliString::from_text("XY").with_phase(1),  // i XY
                 PauliString::from_text("ZZ"),
                 PauliString::from_text("ZZ").with_phase(2)};  // -ZZ
  CHECK(x.alpha() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(x.encoded_operator_is_unitary());

  CounterRng rng(68);
  const auto psi = random_state(rng, 2);
  const auto rep = oaa_amplify(x, psi, 5);
  CHECK(rep.amplified);
  CHECK(rep.p0 == doctest::Approx(0.25).epsilon(1e-10));
  const double theta = std::asin(std::sqrt(rep.p0));
  for (int k = 1; k <= 5; ++k) {
    const double want = std::pow(std::sin((2 * k + 1) * theta), 2);
    CHECK(std::abs(rep.pk[k - 1] - want) < 1e-10);
  }
  // k = 1 lands on certainty for p = 1/4
  CHECK(rep.pk[0] == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("OAA flags non-unitary encoded operators") {
  PauliSum proj(1);
  proj.add_term(PauliString(1), 0.5);
  proj.add_term(PauliString::from_text("Z"), 0.5);
  StateVector plus(1);
  plus.apply(Gate::single(GateKind::Had, 0));
  const auto rep = oaa_amplify(LCUDecomposition::from_pauli_sum(proj), plus, 2);
  CHECK_FALSE(rep.amplified);
  CHECK(rep.pk.empty());
}

TEST_CASE("Taylor evolution: t = 0 is the identity") {
  CounterRng rng(69);
  const auto psi = random_state(rng, 2);
  const PauliSum h = random_hermitian_sum(rng, 2, 3);
  const auto rep = taylor_evolve(h, psi, 0.0, 4);
  CHECK(state_distance(rep.state, psi) == 0.0);
  CHECK(rep.apriori_bound == 0.0);
}

TEST_CASE("Taylor evolution of H = Z at K = 4 meets the remainder bound") {
  StateVector plus(1);
  plus.apply(Gate::single(GateKind::Had, 0));
  PauliSum z(PauliString::from_text("Z"), 1.0);
  const auto rep = taylor_evolve(z, plus, 0.1, 4, 1);

  StateVector exact = plus;
  exact.apply_pauli_rotation(PauliString::from_text("Z"), 0.2);  // exp(-i 0.1 Z)
  CHECK(state_distance(rep.state, exact) < std::pow(0.1, 5) / 120.0);
}

TEST_CASE("required K for fixed accuracy grows sublinearly in 1/eps") {
  CounterRng rng(70);
  const PauliSum h = random_hermitian_sum(rng, 2, 3);
  const auto psi = random_state(rng, 2);
  const double t = 1.0;

  const Matrix u = expm_hermitian(to_dense(h), cplx(0, -t));
  Vector exact(psi.dim());
  for (std::int64_t i = 0; i < psi.dim(); ++i) exact(i) = psi.amplitudes()[i];
  exact = u * exact;

  auto k_needed = [&](double eps) {
    for (int k = 1; k <= 40; ++k) {
      const auto rep = taylor_evolve(h, psi, t, k);
      double dist = 0.0;
      for (std::int64_t i = 0; i < psi.dim(); ++i) {
        dist = std::max(dist, std::abs(rep.state.amplitudes()[i] - exact(i)));
      }
      if (dist < eps) return k;
    }
    return 41;
  };
  const int k3 = k_needed(1e-3);
  const int k6 = k_needed(1e-6);
  const int k9 = k_needed(1e-9);
  CHECK(k3 <= k6);
  CHECK(k6 <= k9);
  // sublinear: a thousandfold accuracy gain costs a few extra orders, far
  // below the 1000x a linear law would need
  CHECK(k9 - k6 <= 6);
  CHECK(k6 - k3 <= 6);
  CHECK(k9 <= 24);
}

TEST_CASE("qubiterate of a single Pauli term has eigenphases 0 and pi") {
  LCUDecomposition x;
  x.n_qubits = 1;
  x.alphas = {1.0};
  x.unitaries = {PauliString::from_text("Z")};
  const auto rep = build_qubiterate(x);
  CHECK(rep.block_error < 1e-12);
  CHECK(rep.phase_match_error < 1e-12);
  // lambda = +1 -> phase 0, lambda = -1 -> phase pi
  REQUIRE(rep.subspace_phases.size() == 2);
  const double lo = std::min(std::abs(rep.subspace_phases[0]),
                             std::abs(rep.subspace_phases[1]));
  const double hi = std::max(std::abs(rep.subspace_phases[0]),
                             std::abs(rep.subspace_phases[1]));
  CHECK(lo < 1e-10);
  CHECK(hi == doctest::Approx(3.141592653589793).epsilon(1e-10));
}

TEST_CASE("qubiterate spectral structure on random LCU Hamiltonians") {
  CounterRng rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(2));
    PauliSum h = random_hermitian_sum(rng, n, 3 + static_cast<int>(rng.next_below(3)));
    if (h.empty()) continue;
    const auto x = LCUDecomposition::from_pauli_sum(h);
    const auto rep = build_qubiterate(x);
    CHECK(rep.block_error < 1e-10);
    CHECK(rep.phase_match_error < 1e-8);
    CHECK(rep.cos_match_error < 1e-10);

    // invariant-subspace multiset equals {+-arccos(lambda_i)}, compared on
    // the cosine scale where the statement is well conditioned
    std::vector<double> expect;
    for (double l : rep.lambdas) {
      expect.push_back(l);
      if (std::abs(l) < 1.0 - 1e-9) expect.push_back(l);
    }
    std::vector<double> got;
    for (double ph : rep.subspace_phases) got.push_back(std::cos(ph));
    CHECK(test::max_multiset_distance(got, expect) < 1e-10);
  }
}

TEST_CASE("QPE recovers a dyadic phase deterministically") {
  Matrix u(1, 1);
  u(0, 0) = std::exp(cplx(0, 6.283185307179586 * 3.0 / 8.0));
  // embed as a phase on |1> of one qubit
  Matrix u2 = Matrix::Identity(2, 2);
  u2(1, 1) = u(0, 0);
  StateVector one(1, 1);
  const auto res = qpe_unitary(u2, one, 3, 4096, 77);
  CHECK(res.best_outcome == 3);  // 011
  CHECK(res.phase_estimate == doctest::Approx(0.375));
  CHECK(res.p_best == doctest::Approx(1.0));
  CHECK(res.distribution[3] == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("QPE at theta = 1/3 concentrates at least 4/pi^2 on the best outcome") {
  Matrix u2 = Matrix::Identity(2, 2);
  u2(1, 1) = std::exp(cplx(0, 6.283185307179586 / 3.0));
  StateVector one(1, 1);
  const int t = 5;
  const std::uint64_t shots = 10000;
  const auto res = qpe_unitary(u2, one, t, shots, 123);
  const double k0 = std::round(32.0 / 3.0);  // nearest integer to 2^t / 3
  CHECK(static_cast<double>(res.best_outcome) == k0);
  const double sigma = std::sqrt(0.405 * (1 - 0.405) / static_cast<double>(shots));
  CHECK(res.p_best >= 4.0 / (3.141592653589793 * 3.141592653589793) - 3 * sigma);
}

TEST_CASE("QPE on a shifted Hamiltonian maps estimates back to energies") {
  CounterRng rng(72);
  const PauliSum h = random_hermitian_sum(rng, 2, 4);
  Eigen::SelfAdjointEigenSolver<Matrix> es(to_dense(h));
  const double e_lo = es.eigenvalues()(0) - 0.05;
  const double e_hi = es.eigenvalues()(3) + 0.05;

  // eigenstate 1 as input
  std::vector<cplx> amps(4);
  for (int i = 0; i < 4; ++i) amps[i] = es.eigenvectors().col(1)(i);
  const auto psi = StateVector::from_amplitudes(2, std::move(amps));

  const auto res = qpe_hamiltonian(h, psi, 9, e_lo, e_hi, 2000, 7);
  CHECK(std::abs(res.energy - es.eigenvalues()(1)) <
        (e_hi - e_lo) / (1 << 9) + 1e-12);
}

TEST_CASE("more ancillae concentrate the QPE distribution") {
  const double theta = 1.0 / 3.0;
  double prev = 0.0;
  for (int t : {5, 7, 9}) {
    const auto dist = qpe_reference_distribution(theta, t);
    // mass within a fixed window 2^-4 of theta
    double mass = 0.0;
    for (std::size_t z = 0; z < dist.size(); ++z) {
      const double ph = static_cast<double>(z) / static_cast<double>(dist.size());
      const double d = std::abs(std::remainder(ph - theta, 1.0));
      if (d <= 1.0 / 16.0) mass += dist[z];
    }
    CHECK(mass >= prev - 1e-9);
    prev = mass;
  }
  CHECK(prev > 0.98);
}

TEST_CASE("ASP with T = 0 leaves the state unchanged") {
  PauliSum h0(PauliString::from_text("ZI"), 1.0);
  PauliSum h1(PauliString::from_text("XX"), 0.4);
  const auto psi0 = ground_state_vector(h0);
  const auto res = adiabatic_prepare(h0, h1, psi0, 0.0, 1);
  CHECK(state_distance(res.state, psi0) < 1e-14);
}

TEST_CASE("ASP infidelity decreases with the ramp time") {
  PauliSum h0(2);
  h0.add_term(PauliString::from_text("ZI"), 1.0);
  h0.add_term(PauliString::from_text("IZ"), 0.8);
  PauliSum h1(2);
  h1.add_term(PauliString::from_text("XX"), 0.5);
  h1.add_term(PauliString::from_text("XI"), 0.3);
  const auto psi0 = ground_state_vector(h0);

  double prev_infidelity = 1.0;
  int improved = 0;
  for (double t_total : {1.0, 4.0, 16.0, 64.0}) {
    const auto res =
        adiabatic_prepare(h0, h1, psi0, t_total, static_cast<int>(t_total * 64));
    CHECK_FALSE(res.gap_warning);
    const double inf = 1.0 - res.overlap;
    if (inf < prev_infidelity) ++improved;
    prev_infidelity = inf;
  }
  CHECK(improved >= 3);
  CHECK(prev_infidelity < 1e-2);
}

TEST_CASE("molecular H0 follows the Fock prescription on the fixture") {
  const auto ints = read_fcidump_file(fixture_path("h2_sto6g.fcidump"));
  const PauliSum h0 = molecular_initial_hamiltonian(ints);
  const PauliSum h = jordan_wigner(build_molecular_hamiltonian(ints));
  const auto hf = hartree_fock_state(2, 2);

  // <HF| H0 |HF> = <HF| H |HF> by construction of the shift
  CHECK(hf.expectation(h0).real() ==
        doctest::Approx(hf.expectation(h).real()).epsilon(1e-10));
  // HF is the ground state of H0 (gapped one-body spectrum)
  const auto [e0, gs] = ground_state(to_dense(h0));
  CHECK(std::abs(e0 - hf.expectation(h0).real()) < 1e-10);

  // adiabatic interpolation H0 -> H improves the HF overlap with the exact
  // ground state
  PauliSum h1 = h;
  h1 -= h0;
  const auto res = adiabatic_prepare(h0, h1, hf, 40.0, 1600);
  const auto gs_full = ground_state_vector(h);
  const double hf_overlap = std::norm(hf.inner(gs_full));
  CHECK(res.overlap > hf_overlap);
  CHECK(res.overlap > 0.99);
}

TEST_CASE("correlation function basics and spectral peaks") {
  // 2-level toy: H = w Z/2, A = B = X
  const double w = 1.3;
  PauliSum h(PauliString::from_text("Z"), w / 2);
  PauliSum a(PauliString::from_text("X"), 1.0);
  StateVector gs(1, 1);  // ground state of Z/2 is |1>
  const double e0 = -w / 2;

  std::vector<double> times;
  const int n_t = 64;
  const double dt = 2.0 * 3.141592653589793 / (n_t * w) * 8;  // a few periods
  for (int i = 0; i < n_t; ++i) times.push_back(i * dt);

  const auto res = correlation_function(h, a, a, gs, e0, times);

  // C(0) = <A^dag A> = 1, real and nonnegative
  CHECK(res.dense_path[0].real() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(res.dense_path[0].imag()) < 1e-10);

  // circuit path agrees with dense propagation
  for (int i = 0; i < n_t; ++i) {
    CHECK(std::abs(res.dense_path[i] - res.circuit_path[i]) < 1e-8);
  }

  // S(omega) peaks at E_f - E0 = w
  std::size_t best = 0;
  for (std::size_t k = 1; k < res.spectral.size() / 2; ++k) {
    if (res.spectral[k] > res.spectral[best]) best = k;
  }
  CHECK(std::abs(res.omegas[best] - w) <= res.omegas[1] / 2 + 1e-12);
}

TEST_CASE("correlation transform rejects non-uniform grids") {
  PauliSum h(PauliString::from_text("Z"), 1.0);
  PauliSum a(PauliString::from_text("X"), 1.0);
  StateVector gs(1, 1);
  CHECK_THROWS_AS(correlation_function(h, a, a, gs, -1.0, {0.0, 0.1, 0.3}),
                  ArgumentError);
}
