// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qce/errors.hpp"

namespace qce {

enum class OptimizerKind { spsa, adam, gradient_descent };

struct OptimizerConfig {
  OptimizerKind kind = OptimizerKind::gradient_descent;
  int max_iterations = 400;
  std::uint64_t seed = 1;
  double tolerance = 1e-10;   // stop when the best value stalls this tightly
  int patience = 40;          // window for stall / divergence detection

  // SPSA: perturbation c_n = c n^{-gamma}, step a_n = a / n, with a short
  // calibration phase scaling `a` from probe gradients.
  double spsa_a = 0.1;
  double spsa_c = 0.1;
  double spsa_gamma = 0.101;
  bool spsa_calibrate = true;

  // ADAM moments
  double adam_step = 0.1;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_eps = 1e-8;
};

struct OptimizeResult {
  double best_value = 0.0;
  std::vector<double> best_params;
  int iterations = 0;
  bool diverged = false;
  std::vector<double> trace;  // objective value per iteration
  std::uint64_t seed = 0;
};

using Objective = std::function<double(const std::vector<double>&)>;
using Gradient = std::function<std::vector<double>(const std::vector<double>&)>;

/// Minimizes the objective. SPSA uses only function values (two per
/// iteration); ADAM and gradient descent require the gradient callback.
OptimizeResult minimize(const Objective& f, const Gradient& grad,
                        std::vector<double> x0, const OptimizerConfig& config);

}  // namespace qce
