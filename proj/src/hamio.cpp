// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#include "qce/hamio.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qce {

// ---------------------------------------------------------------------------
// MolecularIntegrals

MolecularIntegrals::MolecularIntegrals(int n_spatial, int n_electrons, int ms2,
                                       double e_nuc)
    : n_(n_spatial), n_electrons_(n_electrons), ms2_(ms2), e_nuc_(e_nuc) {
  if (n_spatial < 1) throw ArgumentError("orbital count must be positive");
  h_.assign(static_cast<std::size_t>(n_) * n_, 0.0);
  const std::size_t n4 = static_cast<std::size_t>(n_) * n_ * n_ * n_;
  eri_.assign(n4, 0.0);
}

std::size_t MolecularIntegrals::idx2(int p, int r) const {
  if (p < 0 || p >= n_ || r < 0 || r >= n_) throw ArgumentError("orbital index out of range");
  return static_cast<std::size_t>(p) * n_ + r;
}

std::size_t MolecularIntegrals::idx4(int p, int r, int q, int s) const {
  if (p < 0 || p >= n_ || r < 0 || r >= n_ || q < 0 || q >= n_ || s < 0 || s >= n_) {
    throw ArgumentError("orbital index out of range");
  }
  return ((static_cast<std::size_t>(p) * n_ + r) * n_ + q) * n_ + s;
}

void MolecularIntegrals::set_h(int p, int r, double value) {
  h_[idx2(p, r)] = value;
  h_[idx2(r, p)] = value;
}

void MolecularIntegrals::set_eri(int p, int r, int q, int s, double value) {
  eri_[idx4(p, r, q, s)] = value;
  eri_[idx4(r, p, q, s)] = value;
  eri_[idx4(p, r, s, q)] = value;
  eri_[idx4(r, p, s, q)] = value;
  eri_[idx4(q, s, p, r)] = value;
  eri_[idx4(s, q, p, r)] = value;
  eri_[idx4(q, s, r, p)] = value;
  eri_[idx4(s, q, r, p)] = value;
}

void MolecularIntegrals::validate(double tol) const {
  for (int p = 0; p < n_; ++p) {
    for (int r = 0; r < p; ++r) {
      if (std::abs(h(p, r) - h(r, p)) > tol) {
        throw NumericalError("one-body integrals are not symmetric");
      }
    }
  }
  for (int p = 0; p < n_; ++p) {
    for (int r = 0; r < n_; ++r) {
      for (int q = 0; q < n_; ++q) {
        for (int s = 0; s < n_; ++s) {
          const double v = eri(p, r, q, s);
          if (std::abs(v - eri(r, p, q, s)) > tol ||
              std::abs(v - eri(p, r, s, q)) > tol ||
              std::abs(v - eri(q, s, p, r)) > tol) {
            throw NumericalError("two-body integrals violate 8-fold symmetry");
          }
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// FCIDUMP

namespace {

// Pulls `KEY=value` integer fields out of the namelist header.
bool header_int(const std::string& header, const std::string& key, int& out) {
  std::size_t pos = 0;
  while ((pos = header.find(key, pos)) != std::string::npos) {
    // must be a full token
    if (pos > 0 && (std::isalnum(header[pos - 1]) || header[pos - 1] == '_')) {
      pos += key.size();
      continue;
    }
    std::size_t p = pos + key.size();
    while (p < header.size() && std::isspace(static_cast<unsigned char>(header[p]))) ++p;
    if (p >= header.size() || header[p] != '=') {
      pos += key.size();
      continue;
    }
    ++p;
    while (p < header.size() && std::isspace(static_cast<unsigned char>(header[p]))) ++p;
    std::size_t end = p;
    if (end < header.size() && (header[end] == '+' || header[end] == '-')) ++end;
    while (end < header.size() && std::isdigit(static_cast<unsigned char>(header[end]))) ++end;
    if (end == p) throw ParseError("malformed value for " + key);
    out = std::stoi(header.substr(p, end - p));
    return true;
  }
  return false;
}

struct RawEntry {
  double value;
  int i, j, k, l;
  std::size_t line;
};

}  // namespace

MolecularIntegrals parse_fcidump(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;

  // Header: everything up to &END or a lone '/'.
  std::string header;
  bool header_done = false;
  while (!header_done && std::getline(in, line)) {
    ++line_no;
    std::string upper = line;
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    header += " " + upper;
    if (upper.find("&END") != std::string::npos ||
        upper.find('/') != std::string::npos) {
      header_done = true;
    }
  }
  if (!header_done) throw ParseError("missing &END terminator in FCIDUMP header");
  if (header.find("&FCI") == std::string::npos) {
    throw ParseError("missing &FCI namelist", 1);
  }

  int norb = 0, nelec = 0, ms2 = 0;
  if (!header_int(header, "NORB", norb)) throw ParseError("header lacks NORB", 1);
  if (!header_int(header, "NELEC", nelec)) throw ParseError("header lacks NELEC", 1);
  header_int(header, "MS2", ms2);
  if (norb < 1) throw ParseError("NORB must be positive", 1);

  std::vector<RawEntry> entries;
  while (std::getline(in, line)) {
    ++line_no;
    // skip blank lines
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::istringstream ls(line);
    RawEntry e{};
    if (!(ls >> e.value >> e.i >> e.j >> e.k >> e.l)) {
      throw ParseError("expected 'value i j k l'", line_no);
    }
    std::string extra;
    if (ls >> extra) throw ParseError("trailing text '" + extra + "'", line_no);
    e.line = line_no;
    entries.push_back(e);
  }

  bool have_enuc = false;
  double enuc = 0.0;
  // Track first-seen values so conflicting duplicates are caught.
  std::map<std::array<int, 4>, std::pair<double, std::size_t>> seen;

  auto canon_h = [](int i, int j) {
    return std::array<int, 4>{std::max(i, j), std::min(i, j), 0, 0};
  };
  auto canon_eri = [](int i, int j, int k, int l) {
    int a = std::max(i, j), b = std::min(i, j);
    int c = std::max(k, l), d = std::min(k, l);
    if (a < c || (a == c && b < d)) {
      std::swap(a, c);
      std::swap(b, d);
    }
    return std::array<int, 4>{a, b, c, d};
  };

  for (const auto& e : entries) {
    for (int idx : {e.i, e.j, e.k, e.l}) {
      if (idx < 0 || idx > norb) {
        throw ParseError("orbital index " + std::to_string(idx) + " exceeds NORB",
                         e.line);
      }
    }
    if (e.i == 0 && e.j == 0 && e.k == 0 && e.l == 0) {
      if (have_enuc && std::abs(enuc - e.value) > 1e-10) {
        throw ParseError("conflicting duplicate core-energy entries", e.line);
      }
      enuc = e.value;
      have_enuc = true;
      continue;
    }
    if (e.k == 0 && e.l == 0) {
      if (e.i == 0 || e.j == 0) throw ParseError("one-body entry needs two indices", e.line);
      const auto key = canon_h(e.i, e.j);
      auto it = seen.find(key);
      if (it != seen.end() && std::abs(it->second.first - e.value) > 1e-10) {
        throw ParseError("conflicting duplicate one-body entries", e.line);
      }
      seen[key] = {e.value, e.line};
      continue;
    }
    if (e.i == 0 || e.j == 0 || e.k == 0 || e.l == 0) {
      throw ParseError("two-body entry needs four indices", e.line);
    }
    const auto key = canon_eri(e.i, e.j, e.k, e.l);
    auto it = seen.find(key);
    if (it != seen.end() && std::abs(it->second.first - e.value) > 1e-10) {
      throw ParseError("conflicting duplicate two-body entries", e.line);
    }
    seen[key] = {e.value, e.line};
  }
  MolecularIntegrals ints(norb, nelec, ms2, enuc);
  for (const auto& [key, val] : seen) {
    if (key[2] == 0) ints.set_h(key[0] - 1, key[1] - 1, val.first);
    else ints.set_eri(key[0] - 1, key[1] - 1, key[2] - 1, key[3] - 1, val.first);
  }
  return ints;
}

MolecularIntegrals read_fcidump_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_fcidump(ss.str());
}

std::string write_fcidump(const MolecularIntegrals& ints) {
  const int n = ints.n_spatial();
  std::ostringstream out;
  out << "&FCI NORB=" << n << ",NELEC=" << ints.n_electrons()
      << ",MS2=" << ints.ms2() << ",\n  ORBSYM=";
  for (int i = 0; i < n; ++i) out << "1,";
  out << "\n  ISYM=1,\n&END\n";

  char buf[64];
  auto emit = [&](double v, int i, int j, int k, int l) {
    std::snprintf(buf, sizeof(buf), "%23.16e %4d %4d %4d %4d\n", v, i, j, k, l);
    out << buf;
  };

  // ERI entries: unique 8-fold representatives, ascending.
  for (int p = 0; p < n; ++p) {
    for (int r = 0; r <= p; ++r) {
      for (int q = 0; q <= p; ++q) {
        for (int s = 0; s <= q; ++s) {
          if (q == p && s > r) continue;
          const double v = ints.eri(p, r, q, s);
          if (v != 0.0) emit(v, p + 1, r + 1, q + 1, s + 1);
        }
      }
    }
  }
  for (int p = 0; p < n; ++p) {
    for (int r = 0; r <= p; ++r) {
      const double v = ints.h(p, r);
      if (v != 0.0) emit(v, p + 1, r + 1, 0, 0);
    }
  }
  emit(ints.e_nuc(), 0, 0, 0, 0);
  return out.str();
}

// ---------------------------------------------------------------------------
// Pauli-sum JSON

std::string pauli_sum_to_json(const PauliSum& a) {
  nlohmann::ordered_json j;
  j["n_qubits"] = a.n_qubits();
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [p, c] : a.terms()) {
    nlohmann::ordered_json t;
    t["pauli"] = p.text();
    t["re"] = c.real();
    t["im"] = c.imag();
    j["terms"].push_back(std::move(t));
  }
  return j.dump(2) + "\n";
}

PauliSum pauli_sum_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.contains("n_qubits") || !j["n_qubits"].is_number_integer()) {
    throw ParseError("missing integer field 'n_qubits'");
  }
  const int n = j["n_qubits"].get<int>();
  PauliSum out(n);
  if (!j.contains("terms") || !j["terms"].is_array()) {
    throw ParseError("missing array field 'terms'");
  }
  for (const auto& t : j["terms"]) {
    if (!t.contains("pauli") || !t["pauli"].is_string()) {
      throw ParseError("term lacks string field 'pauli'");
    }
    const std::string text_p = t["pauli"].get<std::string>();
    if (static_cast<int>(text_p.size()) != n) {
      throw ParseError("pauli '" + text_p + "' length does not match n_qubits");
    }
    const PauliString p = PauliString::from_text(text_p);
    const double re = t.value("re", 0.0), im = t.value("im", 0.0);
    out.add_term(p, cplx(re, im));
  }
  return out;
}

PauliSum read_pauli_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return pauli_sum_from_json(ss.str());
}

void write_pauli_file(const std::string& path, const PauliSum& a) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  out << pauli_sum_to_json(a);
}

}  // namespace qce
