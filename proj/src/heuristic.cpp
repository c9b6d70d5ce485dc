#include "gmx/heuristic.hpp"

#include <limits>
#include <numbers>

#include "gmx/xform.hpp"

namespace gmx {

namespace {

// C_X values closer than this are treated as equal when breaking f ties.
constexpr double kCxTie = 1e-12;

} // namespace

Sampler lu_angle_sampler(int n) {
  RVector hi(2 * n);
  hi.head(n).setConstant(std::numbers::pi);
  hi.tail(n).setConstant(2.0 * std::numbers::pi);
  return uniform_box_sampler(RVector::Zero(2 * n), hi);
}

XHeuristicResult x_heuristic(const DensityMatrix& rho, const OptimConfig& cfg) {
  const int n = rho.n_qubits();
  const PenaltyObjective objective(rho);
  const ValueGradient fg = [&](const RVector& x, RVector& g) { return objective.value_and_gradient(x, g); };
  const auto cx_at = [&](const RVector& x) { return x_concurrence(x_projection(objective.transformed(x), n)); };

  XHeuristicResult out;
  const RunObserver observer = [&](const OptimResult& run) {
    out.runs.push_back({run.best_value, cx_at(run.best_point), LUParams::from_flat(n, run.best_point)});
  };

  const std::vector<RVector> seeds{LUParams::identity(n).flat(), LUParams::symmetric_quarter(n).flat()};
  out.optim = multi_start(fg, lu_angle_sampler(n), cfg, seeds, observer);

  // Lowest f wins. Runs tied with it to within tol_fun are one degenerate
  // minimum: the larger C_X is kept, then the earlier run.
  double f_best = std::numeric_limits<double>::infinity();
  for (const HeuristicRun& r : out.runs) f_best = std::min(f_best, r.f);
  const HeuristicRun* chosen = nullptr;
  for (const HeuristicRun& r : out.runs) {
    out.best_cx_seen = std::max(out.best_cx_seen, r.cx);
    if (r.f <= f_best + cfg.tol_fun && (chosen == nullptr || r.cx > chosen->cx + kCxTie)) chosen = &r;
  }
  out.params = chosen->params;
  out.f_min = std::max(0.0, chosen->f);
  out.cx_at_minimizer = chosen->cx;
  // C_X of the untransformed state is itself a bound, so the reported estimate
  // never falls below it even when the lowest-f frame is a worse one.
  out.estimate = std::max(chosen->cx, x_concurrence(x_projection(rho)));
  out.optim.best_point = chosen->params.flat();
  out.optim.best_value = chosen->f;
  return out;
}

StationarityReport stationary_check(const DensityMatrix& rho, const LUParams& p) {
  constexpr double kGradStep = 1e-6;
  constexpr double kHessStep = 1e-4;
  const PenaltyObjective objective(rho);
  const RVector x = p.flat();
  const Eigen::Index dim = x.size();

  StationarityReport report;
  report.grad_norm = grad_penalty_fd(rho, p, kGradStep).norm();

  // Central differences of the analytic gradient, symmetrized.
  Eigen::MatrixXd hess(dim, dim);
  RVector gp, gm;
  for (Eigen::Index i = 0; i < dim; ++i) {
    RVector xp = x, xm = x;
    xp(i) += kHessStep;
    xm(i) -= kHessStep;
    objective.value_and_gradient(xp, gp);
    objective.value_and_gradient(xm, gm);
    hess.row(i) = (gp - gm).transpose() / (2.0 * kHessStep);
  }
  const Eigen::MatrixXd sym = 0.5 * (hess + hess.transpose());
  report.hessian_min_eig = herm_eig(sym.cast<Complex>()).eigenvalues(0);
  report.hessian_psd = report.hessian_min_eig >= -1e-6;
  return report;
}

} // namespace gmx
