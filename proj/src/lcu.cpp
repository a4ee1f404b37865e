// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#include "qce/lcu.hpp"

#include <algorithm>
#include <cmath>

namespace qce {

LCUDecomposition LCUDecomposition::from_pauli_sum(const PauliSum& a) {
  LCUDecomposition out;
  out.n_qubits = a.n_qubits();
  // A general complex coefficient splits as re * P + im * (iP), so every
  // stored unitary stays a fourth-root-signed Pauli string.
  for (const auto& [p, c] : a.terms()) {
    if (std::abs(c.real()) > 0.0) {
      out.alphas.push_back(std::abs(c.real()));
      out.unitaries.push_back(p.with_phase(c.real() > 0 ? 0 : 2));
    }
    if (std::abs(c.imag()) > 0.0) {
      out.alphas.push_back(std::abs(c.imag()));
      out.unitaries.push_back(p.with_phase(c.imag() > 0 ? 1 : 3));
    }
  }
  if (out.alphas.empty()) throw ArgumentError("cannot decompose the zero operator");
  return out;
}

PauliSum LCUDecomposition::to_pauli_sum() const {
  PauliSum a(n_qubits);
  for (std::size_t l = 0; l < alphas.size(); ++l) a.add_term(unitaries[l], alphas[l]);
  return a;
}

double LCUDecomposition::alpha() const {
  double s = 0.0;
  for (double a : alphas) s += a;
  return s;
}

int LCUDecomposition::n_ancilla() const {
  int bits = 0;
  while ((1ULL << bits) < alphas.size()) ++bits;
  return std::max(bits, 1);
}

bool LCUDecomposition::encoded_operator_is_unitary(double tol) const {
  return is_unitary(to_dense(to_pauli_sum()), tol);
}

bool LCUDecomposition::self_inverse_terms() const {
  for (const auto& u : unitaries) {
    if (u.phase_power() % 2 != 0) return false;
  }
  return true;
}

namespace {

// Any unitary whose first column is sqrt(alpha_l / alpha): Gram-Schmidt
// completion of the prepare vector.
Matrix prepare_unitary(const LCUDecomposition& x) {
  const int na = x.n_ancilla();
  const std::int64_t dim = 1LL << na;
  Vector g = Vector::Zero(dim);
  const double a = x.alpha();
  for (std::size_t l = 0; l < x.alphas.size(); ++l) {
    g(static_cast<std::int64_t>(l)) = std::sqrt(x.alphas[l] / a);
  }
  Matrix w = Matrix::Zero(dim, dim);
  w.col(0) = g;
  int filled = 1;
  for (std::int64_t e = 0; e < dim && filled < dim; ++e) {
    Vector v = Vector::Zero(dim);
    v(e) = 1.0;
    for (int c = 0; c < filled; ++c) v -= w.col(c) * (w.col(c).adjoint() * v)(0);
    const double norm = v.norm();
    if (norm < 1e-9) continue;
    w.col(filled++) = v / norm;
  }
  if (filled != dim) throw NumericalError("prepare completion failed");
  return w;
}

void apply_select(StateVector& joint, const LCUDecomposition& x, bool adjoint) {
  const int n = x.n_qubits;
  const std::int64_t sys_dim = 1LL << n;
  auto amps = joint.amplitudes();
  for (std::size_t l = 0; l < x.unitaries.size(); ++l) {
    const PauliString u = adjoint ? x.unitaries[l].adjoint() : x.unitaries[l];
    cplx* slice = amps.data() + static_cast<std::int64_t>(l) * sys_dim;
    kern::apply_pauli(slice, sys_dim, u.x_mask(), u.z_mask(), u.phase_power(),
                      joint.backend());
  }
}

// W_LCU = (W_p^dag x 1) select (W_p x 1) acting on |anc=0>|psi>.
void apply_w_lcu(StateVector& joint, const LCUDecomposition& x, const Matrix& wp,
                 bool adjoint) {
  const int n = x.n_qubits;
  std::vector<int> anc(x.n_ancilla());
  for (int i = 0; i < x.n_ancilla(); ++i) anc[i] = n + i;
  if (!adjoint) {
    joint.apply(Gate::controlled_u({}, anc, wp));
    apply_select(joint, x, false);
    joint.apply(Gate::controlled_u({}, anc, Matrix(wp.adjoint())));
  } else {
    joint.apply(Gate::controlled_u({}, anc, wp));
    apply_select(joint, x, true);
    joint.apply(Gate::controlled_u({}, anc, Matrix(wp.adjoint())));
  }
}

// R = 1 x (1 - 2|0><0|) on the ancillae.
void apply_reflection(StateVector& joint, int n_sys) {
  auto amps = joint.amplitudes();
  const std::int64_t sys_dim = 1LL << n_sys;
  for (std::int64_t i = 0; i < sys_dim; ++i) amps[i] = -amps[i];
}

StateVector embed(const StateVector& psi, int n_anc) {
  StateVector joint(psi.n_qubits() + n_anc);
  auto amps = joint.amplitudes();
  std::fill(amps.begin(), amps.end(), cplx(0, 0));
  const auto src = psi.amplitudes();
  std::copy(src.begin(), src.end(), amps.begin());
  return joint;
}

double ancilla_zero_probability(const StateVector& joint, int n_sys) {
  const auto amps = joint.amplitudes();
  double p = 0.0;
  for (std::int64_t i = 0; i < (1LL << n_sys); ++i) p += std::norm(amps[i]);
  return p;
}

}  // namespace

StateVector lcu_block_state(const LCUDecomposition& x, const StateVector& psi) {
  if (psi.n_qubits() != x.n_qubits) throw DimensionError("state size mismatch");
  if (psi.n_qubits() + x.n_ancilla() > kStateCap) {
    throw ResourceError("LCU ancillae exceed the state cap");
  }
  StateVector joint = embed(psi, x.n_ancilla());
  apply_w_lcu(joint, x, prepare_unitary(x), false);
  return joint;
}

LCUApplyResult lcu_apply(const LCUDecomposition& x, const StateVector& psi) {
  StateVector joint = lcu_block_state(x, psi);
  const int n = x.n_qubits;
  std::vector<int> anc(x.n_ancilla());
  std::vector<int> zeros(x.n_ancilla(), 0);
  for (int i = 0; i < x.n_ancilla(); ++i) anc[i] = n + i;
  LCUApplyResult out;
  out.success_probability = joint.postselect(anc, zeros);  // throws when X psi ~ 0
  StateVector sys(n);
  auto dst = sys.amplitudes();
  const auto src = joint.amplitudes();
  std::copy(src.begin(), src.begin() + sys.dim(), dst.begin());
  out.state = std::move(sys);
  return out;
}

OaaReport oaa_amplify(const LCUDecomposition& x, const StateVector& psi, int k_max) {
  if (k_max < 0) throw ArgumentError("round count must be nonnegative");
  const Matrix wp = prepare_unitary(x);
  const int n = x.n_qubits;

  OaaReport report;
  report.amplified = x.encoded_operator_is_unitary();

  StateVector joint = embed(psi, x.n_ancilla());
  apply_w_lcu(joint, x, wp, false);
  report.p0 = ancilla_zero_probability(joint, n);
  if (!report.amplified) return report;

  for (int k = 1; k <= k_max; ++k) {
    // A = -W R W^dag R
    apply_reflection(joint, n);
    apply_w_lcu(joint, x, wp, true);
    apply_reflection(joint, n);
    apply_w_lcu(joint, x, wp, false);
    auto amps = joint.amplitudes();
    for (auto& a : amps) a = -a;
    report.pk.push_back(ancilla_zero_probability(joint, n));
  }
  return report;
}

EvolutionReport taylor_evolve(const PauliSum& h, const StateVector& psi0, double t,
                              int order_k, int segments) {
  if (order_k < 0) throw ArgumentError("expansion order must be nonnegative");
  EvolutionReport report;
  report.order = order_k;
  report.time = t;
  report.term_order = "taylor-lcu";
  if (t == 0.0 || order_k == 0) {
    // order 0 approximates the identity; the bound below carries the warning
    report.state = psi0;
    report.n_steps = 0;
    if (t == 0.0) {
      report.apriori_bound = 0.0;
      report.measured_error = 0.0;
      return report;
    }
  }

  const double alpha = h.one_norm();
  if (segments <= 0) {
    segments = std::max(1, static_cast<int>(std::ceil(std::abs(t) * alpha / 0.6931471805599453)));
  }
  const double dt = t / segments;

  // V_K(dt) = sum_{m<=K} (-i dt)^m / m! H^m as a Pauli sum
  PauliSum v = PauliSum::identity(h.n_qubits(), 1.0);
  PauliSum power = PauliSum::identity(h.n_qubits(), 1.0);
  cplx fac = 1.0;
  for (int m = 1; m <= order_k; ++m) {
    power = power * h;
    fac *= cplx(0, -dt) / static_cast<double>(m);
    PauliSum term = power;
    term *= fac;
    v += term;
  }
  const LCUDecomposition lcu = LCUDecomposition::from_pauli_sum(v);

  StateVector state = psi0;
  for (int s = 0; s < segments; ++s) state = lcu_apply(lcu, state).state;
  report.state = std::move(state);
  report.n_steps = segments;

  const double hnorm = spectral_norm(to_dense(h));
  double fact = 1.0;
  for (int m = 1; m <= order_k + 1; ++m) fact *= m;
  report.apriori_bound =
      segments * std::pow(std::abs(dt) * hnorm, order_k + 1) / fact;
  return report;
}

QubiterateReport build_qubiterate(const LCUDecomposition& x) {
  if (!x.self_inverse_terms()) {
    throw ArgumentError("walk construction needs self-inverse LCU terms");
  }
  const int n = x.n_qubits;
  const int na = x.n_ancilla();
  const std::int64_t sys_dim = 1LL << n;
  const std::int64_t anc_dim = 1LL << na;
  const std::int64_t dim = anc_dim * sys_dim;
  if (n + na > kDenseCap) throw ResourceError("walk exceeds the dense cap");

  // select = sum_l |l><l| x U_l (identity on padding values of l)
  Matrix select = Matrix::Identity(dim, dim);
  for (std::size_t l = 0; l < x.unitaries.size(); ++l) {
    const Matrix u = to_dense(x.unitaries[l]);
    const std::int64_t off = static_cast<std::int64_t>(l) * sys_dim;
    select.block(off, off, sys_dim, sys_dim) = u;
  }

  Vector g = Vector::Zero(anc_dim);
  const double a = x.alpha();
  for (std::size_t l = 0; l < x.alphas.size(); ++l) {
    g(static_cast<std::int64_t>(l)) = std::sqrt(x.alphas[l] / a);
  }
  const Matrix refl =
      kron(2.0 * g * g.adjoint() - Matrix::Identity(anc_dim, anc_dim),
           Matrix::Identity(sys_dim, sys_dim));

  QubiterateReport report;
  report.walk = refl * select;

  // <g| W |g> block must equal H / alpha
  const Matrix h_scaled = to_dense(x.to_pauli_sum()) / a;
  Matrix block = Matrix::Zero(sys_dim, sys_dim);
  for (std::int64_t ai = 0; ai < anc_dim; ++ai) {
    for (std::int64_t aj = 0; aj < anc_dim; ++aj) {
      const cplx w = std::conj(g(ai)) * g(aj);
      if (w == cplx(0, 0)) continue;
      block += w * report.walk.block(ai * sys_dim, aj * sys_dim, sys_dim, sys_dim);
    }
  }
  report.block_error = (block - h_scaled).cwiseAbs().maxCoeff();

  // invariant-subspace eigenphases: span{|g,lambda>, W|g,lambda>}
  Eigen::SelfAdjointEigenSolver<Matrix> es(h_scaled);
  Eigen::ComplexEigenSolver<Matrix> walk_es(report.walk);
  std::vector<double> walk_phases;
  for (Eigen::Index i = 0; i < walk_es.eigenvalues().size(); ++i) {
    walk_phases.push_back(std::arg(walk_es.eigenvalues()(i)));
  }

  report.phase_match_error = 0.0;
  report.cos_match_error = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double lambda = std::clamp(es.eigenvalues()(i), -1.0, 1.0);
    report.lambdas.push_back(lambda);

    Vector v1 = Vector::Zero(dim);
    for (std::int64_t ai = 0; ai < anc_dim; ++ai) {
      v1.segment(ai * sys_dim, sys_dim) = g(ai) * es.eigenvectors().col(i);
    }
    const Vector wv1 = report.walk * v1;
    const cplx overlap = (v1.adjoint() * wv1)(0);
    Vector v2 = wv1 - overlap * v1;
    const double res = v2.norm();
    if (res < 1e-8) {
      // one-dimensional subspace (lambda at +-1)
      const double phase = std::arg(overlap);
      report.subspace_phases.push_back(phase);
      report.cos_match_error =
          std::max(report.cos_match_error, std::abs(std::cos(phase) - lambda));
    } else {
      v2 /= res;
      Matrix wr(2, 2);
      wr(0, 0) = (v1.adjoint() * wv1)(0);
      wr(1, 0) = (v2.adjoint() * wv1)(0);
      const Vector wv2 = report.walk * v2;
      wr(0, 1) = (v1.adjoint() * wv2)(0);
      wr(1, 1) = (v2.adjoint() * wv2)(0);
      Eigen::ComplexEigenSolver<Matrix> sub(wr);
      for (int j = 0; j < 2; ++j) {
        const double phase = std::arg(sub.eigenvalues()(j));
        report.subspace_phases.push_back(phase);
        report.cos_match_error =
            std::max(report.cos_match_error, std::abs(std::cos(phase) - lambda));
      }
    }

    // both +-arccos(lambda) appear in the full spectrum; the phase scale is
    // only conditioned away from lambda = +-1
    if (std::abs(lambda) <= 1.0 - 1e-6) {
      const double target = std::acos(lambda);
      for (double sign : {1.0, -1.0}) {
        double best = 1e300;
        for (double ph : walk_phases) {
          best = std::min(best, std::abs(std::remainder(ph - sign * target,
                                                        6.283185307179586)));
        }
        report.phase_match_error = std::max(report.phase_match_error, best);
      }
    }
  }
  return report;
}

}  // namespace qce
