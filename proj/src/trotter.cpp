// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#include "qce/trotter.hpp"

#include <cmath>

namespace qce {

double suzuki_coefficient(int two_k) {
  if (two_k < 2 || two_k % 2 != 0) throw ArgumentError("recursion order must be even");
  return 1.0 / (4.0 - std::pow(4.0, 1.0 / (2 * (two_k / 2) + 1)));
}

std::vector<PauliSum> split_terms(const PauliSum& h) {
  std::vector<PauliSum> out;
  out.reserve(h.size());
  for (const auto& [p, c] : h.terms()) out.emplace_back(p, c);
  return out;
}

namespace {

void append_first_order(Circuit& c, const PauliSum& h, double dt, bool reversed) {
  std::vector<std::pair<PauliString, cplx>> terms(h.terms().begin(), h.terms().end());
  if (reversed) std::reverse(terms.begin(), terms.end());
  for (const auto& [p, coeff] : terms) {
    if (std::abs(coeff.imag()) > 1e-12) {
      throw ArgumentError("product formulas need a Hermitian Hamiltonian");
    }
    c.add(Gate::pauli_rotation(p, 2.0 * dt * coeff.real()));
  }
}

void append_order(Circuit& c, const PauliSum& h, double dt, int order) {
  if (order == 1) {
    append_first_order(c, h, dt, false);
    return;
  }
  if (order == 2) {
    // U2 = [prod_{l=L..1} e^{-i dt/2 h_l}] [prod_{l=1..L} e^{-i dt/2 h_l}];
    // the rightmost factor acts first, so forward gates are appended first.
    append_first_order(c, h, dt / 2, false);
    append_first_order(c, h, dt / 2, true);
    return;
  }
  const double a = suzuki_coefficient(order - 2);
  append_order(c, h, a * dt, order - 2);
  append_order(c, h, a * dt, order - 2);
  append_order(c, h, (1.0 - 4.0 * a) * dt, order - 2);
  append_order(c, h, a * dt, order - 2);
  append_order(c, h, a * dt, order - 2);
}

}  // namespace

Circuit trotter_step_circuit(const PauliSum& h, double dt, int order) {
  if (order != 1 && order % 2 != 0) {
    throw ArgumentError("formula order must be 1 or even");
  }
  Circuit c(h.n_qubits());
  append_order(c, h, dt, order);
  return c;
}

double trotter_gamma(const std::vector<PauliSum>& groups, int dense_cap) {
  double gamma = 0.0;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      const PauliSum comm = commutator(groups[i], groups[j]);
      if (comm.empty()) continue;
      gamma += 0.5 * spectral_norm(to_dense(comm, dense_cap));
    }
  }
  return gamma;
}

double trotter_error_bound(const std::vector<PauliSum>& groups, double t,
                           int n_steps, int dense_cap) {
  if (n_steps < 1) throw ArgumentError("step count must be positive");
  const double dt = t / n_steps;
  return trotter_gamma(groups, dense_cap) * n_steps * dt * dt;
}

namespace {

double measure_step_error(const Circuit& step, const PauliSum& h, double t,
                          int n_steps) {
  const Matrix u_step = step.to_dense();
  const Matrix exact = expm_hermitian(to_dense(h), cplx(0, -t));
  Matrix u = Matrix::Identity(u_step.rows(), u_step.cols());
  for (int i = 0; i < n_steps; ++i) u = u_step * u;
  return spectral_norm(u - exact);
}

}  // namespace

EvolutionReport trotter_evolve(const PauliSum& h, const StateVector& psi0, double t,
                               int n_steps, int order, bool measure_error) {
  if (n_steps < 1) throw ArgumentError("step count must be positive");
  const Circuit step = trotter_step_circuit(h, t / n_steps, order);
  EvolutionReport report;
  report.state = psi0;
  report.time = t;
  report.n_steps = n_steps;
  report.order = order;
  for (int i = 0; i < n_steps; ++i) report.state.apply(step);
  if (measure_error) {
    report.measured_error = measure_step_error(step, h, t, n_steps);
    if (order == 1) {
      report.apriori_bound = trotter_error_bound(split_terms(h), t, n_steps);
    }
  }
  return report;
}

EvolutionReport lowrank_trotter_evolve(const FactorizedHamiltonian& fh,
                                       const StateVector& psi0, double t,
                                       int n_steps, bool measure_error) {
  if (n_steps < 1) throw ArgumentError("step count must be positive");
  const Circuit step = lowrank_trotter_step(fh, t / n_steps);
  EvolutionReport report;
  report.state = psi0;
  report.time = t;
  report.n_steps = n_steps;
  report.order = 1;
  report.term_order = "low-rank factor order";
  for (int i = 0; i < n_steps; ++i) report.state.apply(step);
  if (measure_error) {
    const PauliSum h = jordan_wigner(factorized_to_fermion(fh));
    report.measured_error = measure_step_error(step, h, t, n_steps);
  }
  return report;
}

double fitted_loglog_slope(const std::vector<double>& n_values,
                           const std::vector<double>& errors) {
  if (n_values.size() != errors.size() || n_values.size() < 2) {
    throw ArgumentError("slope fit needs matching samples");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const auto m = static_cast<double>(n_values.size());
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    const double x = std::log(n_values[i]);
    const double y = std::log(std::max(errors[i], 1e-300));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace qce
