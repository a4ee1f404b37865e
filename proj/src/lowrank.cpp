// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#include "qce/lowrank.hpp"

#include <cmath>

namespace qce {

double LowRankFactors::reconstruction_error(const MolecularIntegrals& ints) const {
  const int n = ints.n_spatial();
  double frob2 = 0.0;
  for (int p = 0; p < n; ++p) {
    for (int r = 0; r < n; ++r) {
      for (int q = 0; q < n; ++q) {
        for (int s = 0; s < n; ++s) {
          double v = -ints.eri(p, r, q, s);
          for (const auto& l : factors) v += l(p, r) * l(q, s);
          frob2 += v * v;
        }
      }
    }
  }
  return std::sqrt(frob2);
}

LowRankFactors cholesky_factorize(const MolecularIntegrals& ints, double tol) {
  const int n = ints.n_spatial();
  const int dim = n * n;
  Eigen::MatrixXd m(dim, dim);
  for (int p = 0; p < n; ++p) {
    for (int r = 0; r < n; ++r) {
      for (int q = 0; q < n; ++q) {
        for (int s = 0; s < n; ++s) m(p * n + r, q * n + s) = ints.eri(p, r, q, s);
      }
    }
  }
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-8) {
    throw NumericalError("ERI supermatrix is not symmetric");
  }

  Eigen::VectorXd diag = m.diagonal();
  std::vector<Eigen::VectorXd> vectors;
  LowRankFactors out;
  for (int iter = 0; iter < dim; ++iter) {
    int pivot = 0;
    for (int i = 1; i < dim; ++i) {
      if (diag(i) > diag(pivot)) pivot = i;  // ties resolve to the lowest index
    }
    if (diag.minCoeff() < -1e-8) throw NumericalError("ERI supermatrix is not PSD");
    if (diag(pivot) <= tol) break;
    Eigen::VectorXd col = m.col(pivot);
    for (const auto& v : vectors) col -= v * v(pivot);
    col /= std::sqrt(diag(pivot));
    for (int i = 0; i < dim; ++i) diag(i) -= col(i) * col(i);
    vectors.push_back(std::move(col));
  }
  out.residual = diag.maxCoeff();

  for (const auto& v : vectors) {
    Eigen::MatrixXd l(n, n);
    for (int p = 0; p < n; ++p) {
      for (int r = 0; r < n; ++r) l(p, r) = v(p * n + r);
    }
    out.factors.push_back(std::move(l));
  }
  return out;
}

namespace {

// Matrix of G(k, l, theta, phi) restricted to the (k, l) plane:
//   [[cos t, -e^{i phi} sin t], [e^{-i phi} sin t, cos t]].
void left_multiply(Matrix& m, const GivensRotation& g) {
  const double c = std::cos(g.theta), s = std::sin(g.theta);
  for (int col = 0; col < m.cols(); ++col) {
    const cplx a = m(g.k, col), b = m(g.l, col);
    m(g.k, col) = c * a - g.phase * s * b;
    m(g.l, col) = std::conj(g.phase) * s * a + c * b;
  }
}

}  // namespace

Matrix GivensNetwork::reconstruct() const {
  Matrix u = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    u(i, i) = phases.empty() ? cplx(1, 0) : phases[i];
  }
  for (auto it = rotations.rbegin(); it != rotations.rend(); ++it) {
    left_multiply(u, *it);
  }
  return u;
}

GivensNetwork givens_decompose(const Matrix& u, double tol) {
  if (u.rows() != u.cols()) throw ArgumentError("unitary must be square");
  const int n = static_cast<int>(u.rows());
  if (!is_unitary(u, tol)) throw NumericalError("matrix is not unitary");

  Matrix r = u;
  GivensNetwork net;
  net.n = n;
  // Zero the subdiagonal with adjacent-plane rotations, columns left to
  // right, rows bottom up: Ghat_m ... Ghat_1 U = D, so U = prod Ghat_t^dag D.
  for (int col = 0; col + 1 < n; ++col) {
    for (int row = n - 1; row > col; --row) {
      const cplx a = r(row - 1, col), b = r(row, col);
      if (std::abs(b) < 1e-14) continue;
      const double alpha = std::abs(a) < 1e-14 ? 0.0 : std::arg(a);
      const double beta = std::arg(b);
      GivensRotation ghat{row - 1, row, std::atan2(std::abs(b), std::abs(a)),
                          std::exp(cplx(0, alpha - beta + 3.141592653589793))};
      left_multiply(r, ghat);
      // store the inverse rotation, which is the same plane with -theta
      net.rotations.push_back({ghat.k, ghat.l, -ghat.theta, ghat.phase});
    }
  }
  net.phases.resize(n);
  for (int i = 0; i < n; ++i) net.phases[i] = r(i, i);

  if ((net.reconstruct() - u).cwiseAbs().maxCoeff() > tol) {
    throw NumericalError("givens reconstruction exceeded tolerance");
  }
  return net;
}

// ---------------------------------------------------------------------------
// Factorized Hamiltonian

namespace {

// Flips one eigenvector column if needed so det = +1 (the factor W diag W^T
// is unchanged).
void fix_determinant(Eigen::MatrixXd& w) {
  if (w.determinant() < 0) w.col(0) *= -1.0;
}

}  // namespace

FactorizedHamiltonian factorize_hamiltonian(const MolecularIntegrals& ints,
                                            double tol) {
  const int n = ints.n_spatial();
  const LowRankFactors lr = cholesky_factorize(ints, tol);

  // One-body part with the reordering correction t_pr = h_pr - 1/2 sum_q (pq|qr).
  Eigen::MatrixXd t(n, n);
  for (int p = 0; p < n; ++p) {
    for (int r = 0; r < n; ++r) {
      double corr = 0.0;
      for (int q = 0; q < n; ++q) corr += ints.eri(p, q, q, r);
      t(p, r) = ints.h(p, r) - 0.5 * corr;
    }
  }

  FactorizedHamiltonian fh;
  fh.e_core = ints.e_nuc();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> est(t);
  fh.one_body_rotation = est.eigenvectors();
  fh.one_body_levels = est.eigenvalues();
  fix_determinant(fh.one_body_rotation);
  for (const auto& l : lr.factors) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(l);
    Eigen::MatrixXd w = es.eigenvectors();
    fix_determinant(w);
    fh.pair_rotations.push_back(std::move(w));
    fh.pair_levels.push_back(es.eigenvalues());
  }
  return fh;
}

FermionOperator factorized_to_fermion(const FactorizedHamiltonian& fh) {
  const int n = fh.n_spatial();
  const int m = 2 * n;
  FermionOperator h(m);
  h.add_constant(fh.e_core);

  const Eigen::MatrixXd t = fh.one_body_rotation *
                            fh.one_body_levels.asDiagonal() *
                            fh.one_body_rotation.transpose();
  for (int p = 0; p < n; ++p) {
    for (int r = 0; r < n; ++r) {
      if (t(p, r) == 0.0) continue;
      for (int spin = 0; spin < 2; ++spin) {
        h.add_term({{p + spin * n, true}, {r + spin * n, false}}, t(p, r));
      }
    }
  }
  for (std::size_t g = 0; g < fh.pair_rotations.size(); ++g) {
    const Eigen::MatrixXd l = fh.pair_rotations[g] *
                              fh.pair_levels[g].asDiagonal() *
                              fh.pair_rotations[g].transpose();
    // 1/2 ghat^2 with ghat = sum L_pr a^dag_p a_r (both spins)
    for (int p = 0; p < n; ++p) {
      for (int r = 0; r < n; ++r) {
        for (int q = 0; q < n; ++q) {
          for (int s = 0; s < n; ++s) {
            const double v = 0.5 * l(p, r) * l(q, s);
            if (v == 0.0) continue;
            for (int sp = 0; sp < 2; ++sp) {
              for (int sq = 0; sq < 2; ++sq) {
                h.add_term({{p + sp * n, true},
                            {r + sp * n, false},
                            {q + sq * n, true},
                            {s + sq * n, false}},
                           v);
              }
            }
          }
        }
      }
    }
  }
  return h;
}

// ---------------------------------------------------------------------------
// Low-rank Trotter step

namespace {

// Gates of U(W) with U^dag a^dag_{p,sigma} U = sum_q W_{qp} a^dag_{q,sigma}:
// the orbital rotation W is split into adjacent-plane Givens rotations, each
// realized as a pair of commuting Pauli rotations per spin block.
void append_orbital_rotation(Circuit& c, const Eigen::MatrixXd& w, bool inverse) {
  const int n = static_cast<int>(w.rows());
  const int m = 2 * n;
  const GivensNetwork net = givens_decompose(w.cast<cplx>());

  struct PlaneStep {
    int k, l;
    double theta;
  };
  std::vector<PlaneStep> steps;
  for (const auto& g : net.rotations) {
    // real W: phases are +-1; fold a -1 into the angle sign
    const double sgn = g.phase.real() < 0 ? -1.0 : 1.0;
    steps.push_back({g.k, g.l, sgn * g.theta});
  }
  if (inverse) {
    std::reverse(steps.begin(), steps.end());
    for (auto& s : steps) s.theta = -s.theta;
  }

  // Residual -1 diagonal entries are number phases e^{i pi n} = Z on both
  // spin blocks. They are self-inverse; for the inverse they go first.
  auto emit_phases = [&]() {
    for (int p = 0; p < n; ++p) {
      if (net.phases[p].real() < 0) {
        c.add(Gate::single(GateKind::Z, p));
        c.add(Gate::single(GateKind::Z, p + n));
      }
    }
  };

  if (inverse) emit_phases();
  for (const auto& s : steps) {
    for (int spin = 0; spin < 2; ++spin) {
      FermionOperator gen(m);
      gen.add_term({{s.k + spin * n, true}, {s.l + spin * n, false}}, s.theta);
      gen.add_term({{s.l + spin * n, true}, {s.k + spin * n, false}}, -s.theta);
      const PauliSum p = jordan_wigner(gen);  // anti-Hermitian: i * real coeffs
      for (const auto& [str, coeff] : p.terms()) {
        c.add(Gate::pauli_rotation(str, -2.0 * coeff.imag()));
      }
    }
  }
  if (!inverse) emit_phases();
}

// exp(-i dt * sum_terms) for a diagonal (Z-polynomial) fermionic operator.
void append_diagonal_evolution(Circuit& c, const FermionOperator& diag, double dt) {
  const PauliSum p = jordan_wigner(diag);
  for (const auto& [str, coeff] : p.terms()) {
    if (str.x_mask() != 0) throw NumericalError("diagonal operator has X support");
    c.add(Gate::pauli_rotation(str, 2.0 * dt * coeff.real()));
  }
}

}  // namespace

Circuit lowrank_trotter_step(const FactorizedHamiltonian& fh, double dt) {
  const int n = fh.n_spatial();
  const int m = 2 * n;
  Circuit c(m);

  // one-body: U0 then exp(-i dt sum_p t_p n_p) then U0^dag
  append_orbital_rotation(c, fh.one_body_rotation, false);
  FermionOperator d0(m);
  d0.add_constant(fh.e_core);
  for (int p = 0; p < n; ++p) {
    for (int spin = 0; spin < 2; ++spin) {
      d0.add_term({{p + spin * n, true}, {p + spin * n, false}},
                  fh.one_body_levels(p));
    }
  }
  append_diagonal_evolution(c, d0, dt);
  append_orbital_rotation(c, fh.one_body_rotation, true);

  for (std::size_t g = 0; g < fh.pair_rotations.size(); ++g) {
    append_orbital_rotation(c, fh.pair_rotations[g], false);
    FermionOperator dg(m);
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        for (int sp = 0; sp < 2; ++sp) {
          for (int sq = 0; sq < 2; ++sq) {
            const double v = 0.5 * fh.pair_levels[g](p) * fh.pair_levels[g](q);
            dg.add_term({{p + sp * n, true},
                         {p + sp * n, false},
                         {q + sq * n, true},
                         {q + sq * n, false}},
                        v);
          }
        }
      }
    }
    append_diagonal_evolution(c, dg, dt);
    append_orbital_rotation(c, fh.pair_rotations[g], true);
  }
  return c;
}

}  // namespace qce
