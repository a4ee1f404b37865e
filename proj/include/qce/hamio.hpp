// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "qce/integrals.hpp"
#include "qce/pauli.hpp"

namespace qce {

/// Parses FCIDUMP text: a `&FCI NORB=..., NELEC=..., MS2=...` namelist
/// followed by `value i j k l` lines (1-based). The (0,0,0,0) entry is the
/// nuclear repulsion, (i,j,0,0) entries are h_ij, everything else is a
/// chemists' (ij|kl) integral expanded over its 8-fold symmetry.
MolecularIntegrals parse_fcidump(const std::string& text);

MolecularIntegrals read_fcidump_file(const std::string& path);

/// Canonical inverse of parse_fcidump: unique symmetry representatives in
/// ascending index order, 17 significant digits, zeros omitted, nuclear
/// repulsion last.
std::string write_fcidump(const MolecularIntegrals& ints);

/// JSON for Pauli sums: {"n_qubits": n, "terms": [{"pauli": "XZIY", "re":
/// ..., "im": ...}]}. parse . write is the identity.
std::string pauli_sum_to_json(const PauliSum& a);
PauliSum pauli_sum_from_json(const std::string& text);

PauliSum read_pauli_file(const std::string& path);
void write_pauli_file(const std::string& path, const PauliSum& a);

}  // namespace qce
