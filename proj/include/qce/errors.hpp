// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace qce {

/// Operator or register sizes do not match.
struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A dense-representation or memory cap would be exceeded.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A caller-supplied value violates a precondition.
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Malformed input text. Carries a line number when known (1-based, 0 = unknown).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_number(line) {}
  std::size_t line_number;
};

/// A numerical condition failed at runtime (annihilated state, non-PSD matrix,
/// impossible post-selection, ill-conditioned solve, ...).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A Kraus set fails completeness, or a channel is otherwise invalid.
struct ChannelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A tapering generator fails its commutation precondition.
struct SymmetryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qce
