#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "gmx/matcore.hpp"

namespace gmx {

struct OptimConfig {
  double tol_x = 1e-11;   // stop when the accepted step norm falls below this
  double tol_fun = 1e-11; // stop when |f_{k+1} - f_k| falls below this
  int max_iters = 10000;  // per BFGS run
  int restarts = 20;      // random starts in multi_start
  std::uint64_t seed = 0;

  void validate() const;
};

struct OptimResult {
  double best_value = 0.0;
  RVector best_point;
  int iterations = 0; // summed over runs for multi_start
  bool converged = false;
  int restarts_used = 1;
  double wall_time = 0.0; // seconds
  std::vector<double> history;    // accepted values of a single run, starting with f(x0)
  std::vector<double> run_values; // best value of every run (multi_start only)
};

/// Wrapper for the ubiquitous "optimizer output plus a scheme-level estimate".
struct EstimateResult {
  double estimate = 0.0;
  std::optional<double> residual;
  OptimResult optim;
};

using Objective = std::function<double(const RVector&)>;
using Gradient = std::function<RVector(const RVector&)>;
/// Returns f(x) and writes grad f(x) into the second argument.
using ValueGradient = std::function<double(const RVector&, RVector&)>;
using Sampler = std::function<RVector(std::mt19937_64&)>;
using RunObserver = std::function<void(const OptimResult&)>;

struct LineSearchParams {
  double c1 = 1e-4;
  double c2 = 0.9;
  int max_evals = 40;
};

/// BFGS with inverse-Hessian updates and a strong-Wolfe line search.
/// Never throws on numerical trouble: a failed line search ends the run with
/// converged = false at the best point seen so far.
OptimResult bfgs_minimize(const ValueGradient& fg, const RVector& x0, const OptimConfig& cfg,
                          const LineSearchParams& ls = {});
OptimResult bfgs_minimize(const Objective& f, const Gradient& grad, const RVector& x0, const OptimConfig& cfg,
                          const LineSearchParams& ls = {});

/// Runs BFGS from every point in `seeds` (in order) and then from cfg.restarts
/// sampled points. Restart r draws from an independent generator derived from
/// (cfg.seed, r), so the outcome does not depend on execution order.
///
/// A later run displaces the incumbent only if it improves on it by more than
/// cfg.tol_fun; among runs tied within tolerance the earliest wins.
OptimResult multi_start(const ValueGradient& fg, const Sampler& sampler, const OptimConfig& cfg,
                        const std::vector<RVector>& seeds = {}, const RunObserver& observer = {});
OptimResult multi_start(const Objective& f, const Gradient& grad, const Sampler& sampler, const OptimConfig& cfg,
                        const std::vector<RVector>& seeds = {}, const RunObserver& observer = {});

std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index);

/// Independent uniform draws in [lo_i, hi_i).
Sampler uniform_box_sampler(RVector lo, RVector hi);

/// Central finite-difference gradient wrapped as a ValueGradient.
ValueGradient with_central_differences(Objective f, double h = 1e-6);

} // namespace gmx
