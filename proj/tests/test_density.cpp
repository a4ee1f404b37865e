// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "doctest.h"
#include "qce/density.hpp"
#include "qce/rng.hpp"

using namespace qce;

namespace {

DensityMatrix random_mixed(CounterRng& rng, int n) {
  const std::int64_t d = 1LL << n;
  Matrix a(d, d);
  for (std::int64_t i = 0; i < d; ++i) {
    for (std::int64_t j = 0; j < d; ++j) a(i, j) = cplx(rng.normal(), rng.normal());
  }
  Matrix rho = a * a.adjoint();
  rho /= rho.trace();
  return DensityMatrix::from_matrix(n, rho);
}

}  // namespace

TEST_CASE("unitary evolution matches the dense conjugation oracle") {
  CounterRng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    auto rho = random_mixed(rng, 3);
    const Matrix before = rho.to_matrix();

    Circuit c(3);
    c.add(Gate::single(GateKind::Had, 0));
    c.add(Gate::cnot(0, 2));
    c.add(Gate::single(GateKind::Rz, 1, rng.uniform(-3, 3)));
    c.add(Gate::single(GateKind::S, 2));
    c.add(Gate::pauli_rotation(PauliString::from_text("XYZ"), rng.uniform(-3, 3)));
    rho.apply(c);

    const Matrix u = c.to_dense();
    const Matrix expect = u * before * u.adjoint();
    CHECK((rho.to_matrix() - expect).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(rho.trace() - 1.0) < 1e-12);
    CHECK(rho.purity() <= 1.0 + 1e-10);
  }
}

TEST_CASE("channels preserve trace and Hermiticity") {
  CounterRng rng(32);
  auto rho = random_mixed(rng, 2);
  rho.apply_channel(channels::depolarizing(0, 0.3));
  rho.apply_channel(channels::amplitude_damping(1, 0.5));
  rho.apply_channel(channels::phase_damping(0, 0.2));
  CHECK(std::abs(rho.trace() - 1.0) < 1e-12);
  CHECK(rho.hermiticity_error() < 1e-12);
  const auto eigs = eigenvalues_hermitian(rho.to_matrix());
  CHECK(eigs.front() > -1e-10);
}

TEST_CASE("full amplitude damping sends |1><1| to |0><0|") {
  DensityMatrix rho(1, 1);
  rho.apply_channel(channels::amplitude_damping(0, 1.0));
  CHECK(std::abs(rho.to_matrix()(0, 0) - 1.0) < 1e-14);
  CHECK(std::abs(rho.to_matrix()(1, 1)) < 1e-14);
}

TEST_CASE("depolarizing at rate p equals (1-p) rho + p I/2 per qubit") {
  CounterRng rng(33);
  for (double p : {0.1, 0.55, 1.0}) {
    auto rho = random_mixed(rng, 2);
    const Matrix before = rho.to_matrix();
    rho.apply_channel(channels::depolarizing(0, p));

    // Dense channel oracle: (1-p) rho + p (I/2 tensor tr_0 rho) on qubit 0.
    const Matrix x = kron(Matrix::Identity(2, 2), mats::x());
    const Matrix y = kron(Matrix::Identity(2, 2), mats::y());
    const Matrix z = kron(Matrix::Identity(2, 2), mats::z());
    const Matrix expect = (1 - 0.75 * p) * before +
                          0.25 * p * (x * before * x + y * before * y + z * before * z);
    CHECK((rho.to_matrix() - expect).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("expectation decay under repeated amplitude damping follows (1-g)^m") {
  const double g = 0.13;
  DensityMatrix rho(1, 1);
  for (int m = 1; m <= 20; ++m) {
    rho.apply_channel(channels::amplitude_damping(0, g));
    const double pop = 0.5 * (1.0 - rho.expectation(PauliString::from_text("Z")).real());
    CHECK(std::abs(pop - std::pow(1.0 - g, m)) < 1e-12);
  }
}

TEST_CASE("incomplete Kraus set is rejected") {
  Matrix k0(2, 2);
  k0 << 0.5, 0, 0, 0.5;
  CHECK_THROWS_AS(KrausChannel({0}, {k0}), ChannelError);
}

TEST_CASE("purity equals one for unitary-only evolution, less after noise") {
  StateVector s(2);
  s.apply(Gate::single(GateKind::Had, 0));
  s.apply(Gate::cnot(0, 1));
  auto rho = DensityMatrix::from_state(s);
  CHECK(rho.purity() == doctest::Approx(1.0).epsilon(1e-12));
  rho.apply_channel(channels::depolarizing(0, 0.2));
  CHECK(rho.purity() < 1.0 - 1e-4);
}

TEST_CASE("density expectation matches the statevector on pure states") {
  CounterRng rng(34);
  std::vector<cplx> amps(8);
  for (auto& a : amps) a = {rng.normal(), rng.normal()};
  auto s = StateVector::from_amplitudes(3, amps);
  s.normalize();
  auto rho = DensityMatrix::from_state(s);
  PauliSum op(3);
  op.add_term(PauliString::from_text("XZY"), 0.7);
  op.add_term(PauliString::from_text("IZZ"), cplx(0.1, -0.4));
  op.add_term(PauliString::from_text("YII"), -0.3);
  CHECK(std::abs(rho.expectation(op) - s.expectation(op)) < 1e-12);
}

TEST_CASE("diagonal sampling distribution") {
  DensityMatrix rho(2);
  rho.apply(Gate::single(GateKind::Had, 0));
  rho.apply_channel(channels::phase_damping(0, 1.0));
  const auto probs = rho.probabilities();
  CHECK(probs[0] == doctest::Approx(0.5));
  CHECK(probs[1] == doctest::Approx(0.5));
}
