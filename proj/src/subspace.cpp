// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#include "qce/subspace.hpp"

#include <bit>
#include <cmath>

#include "qce/fermion.hpp"
#include "qce/trotter.hpp"

namespace qce {

SubspaceProblem::Solution SubspaceProblem::solve() const {
  const auto dim = s.rows();
  if (dim == 0 || h.rows() != dim) throw ArgumentError("subspace matrices are empty");

  Eigen::SelfAdjointEigenSolver<Matrix> es(s);
  Solution sol;
  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (es.eigenvalues()(i) > threshold) kept.push_back(i);
    else sol.discarded.push_back(es.eigenvalues()(i));
  }
  if (kept.empty()) throw NumericalError("all overlap singular values below threshold");

  Matrix x(dim, static_cast<Eigen::Index>(kept.size()));
  for (std::size_t c = 0; c < kept.size(); ++c) {
    x.col(static_cast<Eigen::Index>(c)) =
        es.eigenvectors().col(kept[c]) / std::sqrt(es.eigenvalues()(kept[c]));
  }
  const Matrix hp = x.adjoint() * h * x;
  Eigen::SelfAdjointEigenSolver<Matrix> hes(hp);
  sol.kept = static_cast<int>(kept.size());
  for (Eigen::Index i = 0; i < hes.eigenvalues().size(); ++i) {
    sol.eigenvalues.push_back(hes.eigenvalues()(i));
  }
  sol.coefficients = x * hes.eigenvectors();
  return sol;
}

namespace {

Circuit controlled_on(const Circuit& c, int control, int n_total, bool on_zero) {
  Circuit out(n_total);
  if (on_zero) out.add(Gate::single(GateKind::X, control));
  for (Gate g : c.gates()) {
    g.controls.push_back(control);
    out.add(std::move(g));
  }
  if (on_zero) out.add(Gate::single(GateKind::X, control));
  return out;
}

}  // namespace

cplx hadamard_test(const Circuit& prepare_a, const Circuit& prepare_b,
                   const PauliSum& b, std::uint64_t shots, std::uint64_t seed) {
  const int n = prepare_a.n_qubits();
  if (prepare_b.n_qubits() != n || b.n_qubits() != n) {
    throw DimensionError("register size mismatch");
  }
  const int anc = n;
  StateVector joint(n + 1);
  joint.apply(Gate::single(GateKind::Had, anc));
  joint.apply(controlled_on(prepare_b, anc, n + 1, false));
  joint.apply(controlled_on(prepare_a, anc, n + 1, true));

  // 2 <S_- x B> = <X x B> + i <Y x B>
  cplx value = 0.0;
  for (const auto& [p, c] : b.terms()) {
    const PauliString px(n + 1, p.x_mask() | (1ULL << anc), p.z_mask());
    const PauliString py(n + 1, p.x_mask() | (1ULL << anc),
                         p.z_mask() | (1ULL << anc));
    if (shots == 0) {
      value += c * (joint.expectation(px).real() +
                    cplx(0, 1) * joint.expectation(py).real());
    } else {
      const auto ex = joint.sample_pauli(px, shots, seed + 2 * p.x_mask() + 1);
      const auto ey = joint.sample_pauli(py, shots, seed + 2 * p.z_mask() + 2);
      value += c * cplx(ex.mean, ey.mean);
    }
  }
  return value;
}

SubspaceProblem qse_problem(const PauliSum& h, const StateVector& psi0,
                            const std::vector<PauliSum>& excitations,
                            double threshold) {
  if (excitations.empty()) throw ArgumentError("excitation set is empty");
  const auto d = static_cast<Eigen::Index>(excitations.size());
  std::vector<StateVector> vecs;
  vecs.reserve(excitations.size());
  for (const auto& e : excitations) {
    StateVector v = psi0;
    v.apply_operator(e);
    vecs.push_back(std::move(v));
  }
  SubspaceProblem prob;
  prob.threshold = threshold;
  prob.s = Matrix(d, d);
  prob.h = Matrix(d, d);
  for (Eigen::Index a = 0; a < d; ++a) {
    prob.labels.push_back("E" + std::to_string(a));
    for (Eigen::Index bb = 0; bb < d; ++bb) {
      prob.s(a, bb) = vecs[a].inner(vecs[bb]);
      StateVector hv = vecs[bb];
      hv.apply_operator(h);
      prob.h(a, bb) = vecs[a].inner(hv);
    }
  }
  return prob;
}

std::vector<PauliSum> pauli_excitation_basis(int n_qubits, int max_weight) {
  std::vector<PauliSum> basis;
  const std::uint64_t lim = 1ULL << n_qubits;
  for (std::uint64_t x = 0; x < lim; ++x) {
    for (std::uint64_t z = 0; z < lim; ++z) {
      if (std::popcount(x | z) > max_weight) continue;
      basis.emplace_back(PauliString(n_qubits, x, z), 1.0);
    }
  }
  return basis;
}

std::vector<PauliSum> fermionic_excitation_basis(int n_modes,
                                                 std::uint64_t reference,
                                                 int max_rank) {
  std::vector<PauliSum> basis;
  basis.push_back(PauliSum::identity(n_modes, 1.0));
  std::vector<int> occ, vir;
  for (int m = 0; m < n_modes; ++m) {
    if ((reference >> m) & 1) occ.push_back(m);
    else vir.push_back(m);
  }
  for (int i : occ) {
    for (int a : vir) {
      FermionOperator f(n_modes);
      f.add_term({{a, true}, {i, false}}, 1.0);
      basis.push_back(jordan_wigner(f));
    }
  }
  if (max_rank >= 2) {
    for (std::size_t i = 0; i < occ.size(); ++i) {
      for (std::size_t j = i + 1; j < occ.size(); ++j) {
        for (std::size_t a = 0; a < vir.size(); ++a) {
          for (std::size_t b = a + 1; b < vir.size(); ++b) {
            FermionOperator f(n_modes);
            f.add_term({{vir[a], true}, {vir[b], true}, {occ[j], false}, {occ[i], false}},
                       1.0);
            basis.push_back(jordan_wigner(f));
          }
        }
      }
    }
  }
  return basis;
}

SubspaceProblem qfd_problem(const PauliSum& h, const StateVector& psi0, double dt,
                            int dimension, PropagatorKind kind,
                            int trotter_steps_per_interval, double threshold) {
  if (dimension < 1) throw ArgumentError("subspace dimension must be positive");
  std::vector<StateVector> vecs;
  vecs.push_back(psi0);
  if (kind == PropagatorKind::dense) {
    const Matrix u = expm_hermitian(to_dense(h), cplx(0, -dt));
    Vector v(psi0.dim());
    for (std::int64_t i = 0; i < psi0.dim(); ++i) v(i) = psi0.amplitudes()[i];
    for (int k = 1; k < dimension; ++k) {
      v = u * v;
      std::vector<cplx> amps(v.data(), v.data() + v.size());
      vecs.push_back(StateVector::from_amplitudes(psi0.n_qubits(), std::move(amps)));
    }
  } else {
    const Circuit step =
        trotter_step_circuit(h, dt / trotter_steps_per_interval, 2);
    StateVector cur = psi0;
    for (int k = 1; k < dimension; ++k) {
      for (int s = 0; s < trotter_steps_per_interval; ++s) cur.apply(step);
      vecs.push_back(cur);
    }
  }

  SubspaceProblem prob;
  prob.threshold = threshold;
  const auto d = static_cast<Eigen::Index>(vecs.size());
  prob.s = Matrix(d, d);
  prob.h = Matrix(d, d);
  for (Eigen::Index a = 0; a < d; ++a) {
    prob.labels.push_back("t" + std::to_string(a));
    for (Eigen::Index bb = 0; bb < d; ++bb) {
      prob.s(a, bb) = vecs[a].inner(vecs[bb]);
      StateVector hv = vecs[bb];
      hv.apply_operator(h);
      prob.h(a, bb) = vecs[a].inner(hv);
    }
  }
  return prob;
}

std::vector<double> qeom_excitation_energies(const PauliSum& h,
                                             const StateVector& psi0,
                                             const std::vector<PauliSum>& basis,
                                             double threshold) {
  if (basis.empty()) throw ArgumentError("excitation basis is empty");
  const auto d = static_cast<Eigen::Index>(basis.size());

  // expectation helpers working on the Pauli algebra before any state math
  auto expv = [&](const PauliSum& op) { return psi0.expectation(op); };

  Matrix m(d, d), v(d, d);
  for (Eigen::Index a = 0; a < d; ++a) {
    for (Eigen::Index b = 0; b < d; ++b) {
      const PauliSum& oa = basis[a];
      const PauliSum obd = basis[b].adjoint();
      // 2 [A, H, B] = [[A, H], B] + [A, [H, B]]
      const PauliSum c1 = commutator(commutator(oa, h), obd);
      const PauliSum c2 = commutator(oa, commutator(h, obd));
      m(a, b) = 0.5 * (expv(c1) + expv(c2));
      v(a, b) = expv(commutator(oa, obd));
    }
  }

  // metric is Hermitian but indefinite: orthogonalize against |V| and solve
  // sign(V) M' as an ordinary eigenproblem
  Eigen::SelfAdjointEigenSolver<Matrix> es(v);
  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = 0; i < d; ++i) {
    if (std::abs(es.eigenvalues()(i)) > threshold) kept.push_back(i);
  }
  if (kept.empty()) throw NumericalError("qEOM metric vanished below threshold");
  Matrix x(d, static_cast<Eigen::Index>(kept.size()));
  Vector signs(static_cast<Eigen::Index>(kept.size()));
  for (std::size_t c = 0; c < kept.size(); ++c) {
    const double val = es.eigenvalues()(kept[c]);
    x.col(static_cast<Eigen::Index>(c)) =
        es.eigenvectors().col(kept[c]) / std::sqrt(std::abs(val));
    signs(static_cast<Eigen::Index>(c)) = val > 0 ? 1.0 : -1.0;
  }
  const Matrix mp = signs.asDiagonal() * Matrix(x.adjoint() * m * x);
  Eigen::ComplexEigenSolver<Matrix> ces(mp);

  std::vector<double> energies;
  for (Eigen::Index i = 0; i < ces.eigenvalues().size(); ++i) {
    const cplx ev = ces.eigenvalues()(i);
    if (std::abs(ev.imag()) < 1e-7 && ev.real() > 1e-8) {
      energies.push_back(ev.real());
    }
  }
  std::sort(energies.begin(), energies.end());
  return energies;
}

QiteStepResult qite_step(const PauliSum& h_term, const StateVector& psi,
                         double dtau, std::uint64_t domain_mask) {
  if (dtau <= 0) throw ArgumentError("imaginary time step must be positive");
  const int n = psi.n_qubits();

  // normalized imaginary-time target
  StateVector target = psi;
  {
    const Matrix prop = expm_hermitian(to_dense(h_term), cplx(-dtau, 0));
    Vector v(psi.dim());
    for (std::int64_t i = 0; i < psi.dim(); ++i) v(i) = psi.amplitudes()[i];
    v = prop * v;
    v /= v.norm();
    std::vector<cplx> amps(v.data(), v.data() + v.size());
    target = StateVector::from_amplitudes(n, std::move(amps));
  }

  // Pauli basis on the domain
  std::vector<PauliString> basis;
  std::vector<int> domain;
  for (int q = 0; q < n; ++q) {
    if ((domain_mask >> q) & 1) domain.push_back(q);
  }
  const std::size_t k = domain.size();
  for (std::uint64_t code = 1; code < (1ULL << (2 * k)); ++code) {
    std::uint64_t x = 0, z = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const int letter = (code >> (2 * i)) & 3;
      if (letter == 1 || letter == 2) x |= 1ULL << domain[i];
      if (letter == 2 || letter == 3) z |= 1ULL << domain[i];
    }
    basis.emplace_back(n, x, z);
  }

  // S x = b with S_ij = Re<psi|P_i P_j|psi>, b_i = Im<target|P_i|psi>
  const auto dim = static_cast<Eigen::Index>(basis.size());
  std::vector<StateVector> pv;
  pv.reserve(basis.size());
  for (const auto& p : basis) {
    StateVector v = psi;
    v.apply_pauli(p);
    pv.push_back(std::move(v));
  }
  Eigen::MatrixXd s(dim, dim);
  Eigen::VectorXd b(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    b(i) = target.inner(pv[i]).imag();
    for (Eigen::Index j = 0; j < dim; ++j) s(i, j) = pv[i].inner(pv[j]).real();
  }

  QiteStepResult out;
  Eigen::LDLT<Eigen::MatrixXd> ldlt(s);
  Eigen::VectorXd x = ldlt.solve(b);
  if (ldlt.info() != Eigen::Success || !x.allFinite() ||
      (s * x - b).norm() > 1e-8 * std::max(1.0, b.norm())) {
    // ridge fallback for singular normal equations
    out.regularized = true;
    Eigen::MatrixXd reg = s + 1e-10 * Eigen::MatrixXd::Identity(dim, dim);
    x = reg.ldlt().solve(b);
  }
  out.residual = (s * x - b).norm();
  out.x.assign(x.data(), x.data() + x.size());

  // apply exp(i A) exactly
  PauliSum a_gen(n);
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (std::abs(x(i)) > 1e-14) a_gen.add_term(basis[i], x(i));
  }
  StateVector next = psi;
  if (!a_gen.empty()) {
    const Matrix u = expm_hermitian(to_dense(a_gen), cplx(0, 1));
    Vector v(psi.dim());
    for (std::int64_t i = 0; i < psi.dim(); ++i) v(i) = psi.amplitudes()[i];
    v = u * v;
    std::vector<cplx> amps(v.data(), v.data() + v.size());
    next = StateVector::from_amplitudes(n, std::move(amps));
  }
  out.state = std::move(next);
  return out;
}

QiteTrajectory qite_evolve(const PauliSum& h, const StateVector& psi0, double dtau,
                           int n_steps) {
  QiteTrajectory traj;
  traj.state = psi0;
  traj.energies.push_back(traj.state.expectation(h).real());
  const std::uint64_t full = (1ULL << psi0.n_qubits()) - 1;
  for (int s = 0; s < n_steps; ++s) {
    traj.state = qite_step(h, traj.state, dtau, full).state;
    traj.energies.push_back(traj.state.expectation(h).real());
  }
  return traj;
}

SubspaceProblem qlanczos_problem(const PauliSum& h, const StateVector& psi0,
                                 double dtau, int dimension, bool use_qite,
                                 double threshold) {
  if (dimension < 1) throw ArgumentError("subspace dimension must be positive");
  std::vector<StateVector> vecs;
  vecs.push_back(psi0);
  if (use_qite) {
    const std::uint64_t full = (1ULL << psi0.n_qubits()) - 1;
    StateVector cur = psi0;
    for (int k = 1; k < dimension; ++k) {
      cur = qite_step(h, cur, dtau, full).state;
      vecs.push_back(cur);
    }
  } else {
    const Matrix prop = expm_hermitian(to_dense(h), cplx(-dtau, 0));
    Vector v(psi0.dim());
    for (std::int64_t i = 0; i < psi0.dim(); ++i) v(i) = psi0.amplitudes()[i];
    for (int k = 1; k < dimension; ++k) {
      v = prop * v;
      v /= v.norm();
      std::vector<cplx> amps(v.data(), v.data() + v.size());
      vecs.push_back(StateVector::from_amplitudes(psi0.n_qubits(), std::move(amps)));
    }
  }

  SubspaceProblem prob;
  prob.threshold = threshold;
  const auto d = static_cast<Eigen::Index>(vecs.size());
  prob.s = Matrix(d, d);
  prob.h = Matrix(d, d);
  for (Eigen::Index a = 0; a < d; ++a) {
    prob.labels.push_back("tau" + std::to_string(a));
    for (Eigen::Index bb = 0; bb < d; ++bb) {
      prob.s(a, bb) = vecs[a].inner(vecs[bb]);
      StateVector hv = vecs[bb];
      hv.apply_operator(h);
      prob.h(a, bb) = vecs[a].inner(hv);
    }
  }
  return prob;
}

namespace {

// |d_r psi> for every parameter: insert -i m/2 P after each rotation gate
// carrying the parameter (product rule over occurrences).
std::vector<StateVector> derivative_states(const Ansatz& ansatz,
                                           const std::vector<double>& theta) {
  const auto names = ansatz.parameter_names();
  const Circuit bound = ansatz.circuit.bind(theta);
  const int n = ansatz.circuit.n_qubits();
  std::vector<StateVector> derivs(names.size(), StateVector(n));
  std::vector<bool> touched(names.size(), false);

  for (std::size_t g = 0; g < ansatz.circuit.gates().size(); ++g) {
    const Gate& templ = ansatz.circuit.gates()[g];
    if (!templ.is_parametric()) continue;
    std::size_t r = 0;
    while (names[r] != templ.param) ++r;

    StateVector psi(n);
    for (std::size_t gg = 0; gg < bound.gates().size(); ++gg) {
      psi.apply(bound.gates()[gg]);
      if (gg == g) {
        // generator insertion: d/dtheta e^{-i a/2 P} = (-i m/2 P) e^{-i a/2 P}
        PauliString p(n);
        switch (templ.kind) {
          case GateKind::Rx: p = PauliString::single(n, templ.targets[0], 'X'); break;
          case GateKind::Ry: p = PauliString::single(n, templ.targets[0], 'Y'); break;
          case GateKind::Rz: p = PauliString::single(n, templ.targets[0], 'Z'); break;
          case GateKind::PauliRotation: p = templ.pauli; break;
          default: throw ArgumentError("parameter on a non-rotation gate");
        }
        psi.apply_pauli(p);
        for (auto& amp : psi.amplitudes()) amp *= cplx(0, -0.5 * templ.param_mult);
      }
    }
    if (!touched[r]) {
      derivs[r] = psi;
      touched[r] = true;
    } else {
      auto dst = derivs[r].amplitudes();
      const auto src = psi.amplitudes();
      for (std::int64_t i = 0; i < derivs[r].dim(); ++i) dst[i] += src[i];
    }
  }
  return derivs;
}

}  // namespace

McLachlanSystem mclachlan_system(const Ansatz& ansatz,
                                 const std::vector<double>& theta,
                                 const PauliSum& h) {
  const auto derivs = derivative_states(ansatz, theta);
  StateVector psi = ansatz.prepare(theta);
  StateVector hpsi = psi;
  hpsi.apply_operator(h);

  const auto d = static_cast<Eigen::Index>(derivs.size());
  McLachlanSystem sys;
  sys.a = Eigen::MatrixXd(d, d);
  sys.b = Eigen::VectorXd(d);
  for (Eigen::Index r = 0; r < d; ++r) {
    sys.b(r) = derivs[r].inner(hpsi).imag();
    for (Eigen::Index k = 0; k < d; ++k) {
      sys.a(r, k) = derivs[r].inner(derivs[k]).real();
    }
  }
  return sys;
}

VqsStepResult vqs_step(const Ansatz& ansatz, const std::vector<double>& theta,
                       const PauliSum& h, double dt, VqsIntegrator integrator) {
  auto rhs = [&](const std::vector<double>& th) {
    const auto sys = mclachlan_system(ansatz, th, h);
    const auto d = sys.a.rows();
    const Eigen::MatrixXd reg =
        sys.a + 1e-8 * Eigen::MatrixXd::Identity(d, d);
    Eigen::VectorXd dtheta = reg.ldlt().solve(sys.b);
    const bool stiff =
        (sys.a * dtheta - sys.b).norm() > 1e-6 * std::max(1.0, sys.b.norm());
    return std::make_pair(dtheta, stiff);
  };

  VqsStepResult out;
  out.theta = theta;
  if (integrator == VqsIntegrator::euler) {
    const auto [k1, stiff] = rhs(theta);
    out.stiff = stiff;
    for (std::size_t i = 0; i < theta.size(); ++i) out.theta[i] += dt * k1(i);
    return out;
  }
  // classic RK4
  auto shifted = [&](const Eigen::VectorXd& k, double scale) {
    std::vector<double> th = theta;
    for (std::size_t i = 0; i < th.size(); ++i) th[i] += scale * k(i);
    return th;
  };
  const auto [k1, s1] = rhs(theta);
  const auto [k2, s2] = rhs(shifted(k1, dt / 2));
  const auto [k3, s3] = rhs(shifted(k2, dt / 2));
  const auto [k4, s4] = rhs(shifted(k3, dt));
  out.stiff = s1 || s2 || s3 || s4;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    out.theta[i] += dt / 6.0 * (k1(i) + 2 * k2(i) + 2 * k3(i) + k4(i));
  }
  return out;
}

}  // namespace qce
