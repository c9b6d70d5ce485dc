#pragma once

#include <vector>

#include "gmx/lugroup.hpp"
#include "gmx/optim.hpp"
#include "gmx/states.hpp"

namespace gmx {

/// End point of one optimizer run.
struct HeuristicRun {
  double f = 0.0;
  double cx = 0.0; // C_X of the transformed state at the run's minimizer
  LUParams params;
};

struct XHeuristicResult {
  double estimate = 0.0;        // max(cx_at_minimizer, C_X of the untransformed state)
  double cx_at_minimizer = 0.0; // C_X of the transformed state at the best-f minimizer
  double f_min = 0.0;
  LUParams params;
  OptimResult optim;
  double best_cx_seen = 0.0;      // max C_X over the minimizers of every run
  std::vector<HeuristicRun> runs; // in start order: identity, quarter turn, random
};

/// Minimizes penalty_f(U rho U^dagger) over product unitaries and reports the
/// X-concurrence of the transformed state. Starts: identity, the symmetric
/// quarter-turn point, then cfg.restarts uniform random points. Runs whose
/// final f is within cfg.tol_fun of the lowest are treated as one degenerate
/// minimum: the largest C_X among them is kept, then the earliest run. The
/// estimate is floored by the C_X of the untransformed state, which is a bound
/// in its own right.
XHeuristicResult x_heuristic(const DensityMatrix& rho, const OptimConfig& cfg);

/// theta in [0, pi), phi in [0, 2 pi) in the flat LUParams layout.
Sampler lu_angle_sampler(int n);

struct StationarityReport {
  double grad_norm = 0.0;
  double hessian_min_eig = 0.0;
  bool hessian_psd = false;
};

/// Central-difference gradient norm (h = 1e-6) and the smallest eigenvalue of
/// a central-difference Hessian (h = 1e-4) of g at p.
StationarityReport stationary_check(const DensityMatrix& rho, const LUParams& p);

} // namespace gmx
