// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "qce/errors.hpp"

namespace qce {

/// One- and two-electron integrals over n spatial orbitals, chemists'
/// notation (pr|qs) with 8-fold permutational symmetry, plus the nuclear
/// repulsion constant. All energies in Hartree.
class MolecularIntegrals {
 public:
  MolecularIntegrals() = default;
  MolecularIntegrals(int n_spatial, int n_electrons, int ms2, double e_nuc);

  int n_spatial() const { return n_; }
  int n_electrons() const { return n_electrons_; }
  int ms2() const { return ms2_; }
  double e_nuc() const { return e_nuc_; }

  double h(int p, int r) const { return h_[idx2(p, r)]; }
  /// Sets h_pr = h_rp.
  void set_h(int p, int r, double value);

  /// Chemists' (pr|qs).
  double eri(int p, int r, int q, int s) const { return eri_[idx4(p, r, q, s)]; }
  /// Sets all 8 symmetry-related entries.
  void set_eri(int p, int r, int q, int s, double value);

  /// Verifies stored symmetry (h symmetric, eri 8-fold) within tol.
  void validate(double tol = 1e-10) const;

 private:
  std::size_t idx2(int p, int r) const;
  std::size_t idx4(int p, int r, int q, int s) const;

  int n_ = 0;
  int n_electrons_ = 0;
  int ms2_ = 0;
  double e_nuc_ = 0.0;
  std::vector<double> h_;
  std::vector<double> eri_;
};

}  // namespace qce
