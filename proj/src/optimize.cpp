// Copyright 2026 the qce authors
// SPDX-License-Identifier: Apache-2.0

#include "qce/optimize.hpp"

#include <algorithm>
#include <cmath>

#include "qce/rng.hpp"

namespace qce {

namespace {

OptimizeResult run_spsa(const Objective& f, std::vector<double> x,
                        const OptimizerConfig& cfg) {
  CounterRng rng(cfg.seed);
  const std::size_t dim = x.size();
  OptimizeResult out;
  out.seed = cfg.seed;

  double a = cfg.spsa_a;
  if (cfg.spsa_calibrate) {
    // scale the first step toward a fixed target displacement from probe
    // gradient magnitudes at the initial point
    const double c1 = cfg.spsa_c;
    double mean_g = 0.0;
    const int probes = 8;
    for (int p = 0; p < probes; ++p) {
      std::vector<double> plus = x, minus = x;
      for (std::size_t i = 0; i < dim; ++i) {
        const double delta = rng.next_below(2) ? 1.0 : -1.0;
        plus[i] += c1 * delta;
        minus[i] -= c1 * delta;
      }
      mean_g += std::abs(f(plus) - f(minus)) / (2.0 * c1);
    }
    mean_g /= probes;
    if (mean_g > 1e-12) a = 0.1 / mean_g;
  }

  std::vector<double> best = x;
  double best_val = f(x);
  out.trace.push_back(best_val);
  std::vector<double> delta(dim);
  for (int n = 1; n <= cfg.max_iterations; ++n) {
    const double an = a / n;
    const double cn = cfg.spsa_c / std::pow(n, cfg.spsa_gamma);
    std::vector<double> plus = x, minus = x;
    for (std::size_t i = 0; i < dim; ++i) {
      delta[i] = rng.next_below(2) ? 1.0 : -1.0;
      plus[i] += cn * delta[i];
      minus[i] -= cn * delta[i];
    }
    const double df = f(plus) - f(minus);
    for (std::size_t i = 0; i < dim; ++i) {
      x[i] -= an * df / (2.0 * cn * delta[i]);
    }
    const double val = f(x);
    out.trace.push_back(val);
    if (val < best_val) {
      best_val = val;
      best = x;
    }
    out.iterations = n;
  }
  out.best_value = best_val;
  out.best_params = std::move(best);
  return out;
}

OptimizeResult run_adam(const Objective& f, const Gradient& grad,
                        std::vector<double> x, const OptimizerConfig& cfg) {
  const std::size_t dim = x.size();
  OptimizeResult out;
  out.seed = cfg.seed;
  std::vector<double> m(dim, 0.0), v(dim, 0.0);
  std::vector<double> best = x;
  double best_val = f(x);
  out.trace.push_back(best_val);
  int stall = 0;
  for (int n = 1; n <= cfg.max_iterations; ++n) {
    const auto g = grad(x);
    for (std::size_t i = 0; i < dim; ++i) {
      m[i] = cfg.adam_beta1 * m[i] + (1 - cfg.adam_beta1) * g[i];
      v[i] = cfg.adam_beta2 * v[i] + (1 - cfg.adam_beta2) * g[i] * g[i];
      const double mh = m[i] / (1 - std::pow(cfg.adam_beta1, n));
      const double vh = v[i] / (1 - std::pow(cfg.adam_beta2, n));
      x[i] -= cfg.adam_step * mh / (std::sqrt(vh) + cfg.adam_eps);
    }
    const double val = f(x);
    out.trace.push_back(val);
    out.iterations = n;
    if (val < best_val - cfg.tolerance) {
      best_val = val;
      best = x;
      stall = 0;
    } else {
      if (++stall > cfg.patience) break;
    }
  }
  out.best_value = best_val;
  out.best_params = std::move(best);
  return out;
}

OptimizeResult run_gradient_descent(const Objective& f, const Gradient& grad,
                                    std::vector<double> x,
                                    const OptimizerConfig& cfg) {
  OptimizeResult out;
  out.seed = cfg.seed;
  double val = f(x);
  out.trace.push_back(val);
  double step = 1.0;
  int stall = 0;
  for (int n = 1; n <= cfg.max_iterations; ++n) {
    const auto g = grad(x);
    double gnorm2 = 0.0;
    for (double gi : g) gnorm2 += gi * gi;
    if (gnorm2 < 1e-18) {
      out.iterations = n;
      break;
    }
    // Armijo backtracking
    double trial_step = std::min(step * 2.0, 4.0);
    std::vector<double> trial(x.size());
    double trial_val = val;
    bool accepted = false;
    for (int bt = 0; bt < 40; ++bt) {
      for (std::size_t i = 0; i < x.size(); ++i) trial[i] = x[i] - trial_step * g[i];
      trial_val = f(trial);
      if (trial_val <= val - 1e-4 * trial_step * gnorm2) {
        accepted = true;
        break;
      }
      trial_step *= 0.5;
    }
    if (!accepted) {
      out.iterations = n;
      break;
    }
    step = trial_step;
    if (val - trial_val < cfg.tolerance) ++stall;
    else stall = 0;
    x = trial;
    val = trial_val;
    out.trace.push_back(val);
    out.iterations = n;
    if (stall > 3) break;
  }
  out.best_value = val;
  out.best_params = std::move(x);
  return out;
}

}  // namespace

OptimizeResult minimize(const Objective& f, const Gradient& grad,
                        std::vector<double> x0, const OptimizerConfig& config) {
  if (x0.empty()) throw ArgumentError("no parameters to optimize");
  if (config.kind != OptimizerKind::spsa && !grad) {
    throw ArgumentError("this optimizer needs a gradient callback");
  }
  OptimizeResult out;
  switch (config.kind) {
    case OptimizerKind::spsa: out = run_spsa(f, std::move(x0), config); break;
    case OptimizerKind::adam: out = run_adam(f, grad, std::move(x0), config); break;
    case OptimizerKind::gradient_descent:
      out = run_gradient_descent(f, grad, std::move(x0), config);
      break;
  }
  // divergence report: best value strictly worse than the start for a while
  if (!out.trace.empty()) {
    const double first = out.trace.front();
    int worse = 0;
    for (double v : out.trace) {
      if (v > first + 1e-9) ++worse;
    }
    out.diverged = worse > static_cast<int>(out.trace.size()) / 2 &&
                   out.best_value > first - 1e-12;
  }
  return out;
}

}  // namespace qce
