#include "gmx/optim.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gmx {

void OptimConfig::validate() const {
  if (!(tol_x > 0.0) || !(tol_fun > 0.0)) throw std::invalid_argument("OptimConfig: tolerances must be positive");
  if (max_iters < 1) throw std::invalid_argument("OptimConfig: max_iters must be at least 1");
  if (restarts < 0) throw std::invalid_argument("OptimConfig: restarts must be non-negative");
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Point {
  double alpha = 0.0;
  double f = 0.0;
  double slope = 0.0; // directional derivative along p
  RVector x;
  RVector g;
};

enum class SearchStatus { strong_wolfe, sufficient_decrease, failed };

struct SearchOutcome {
  SearchStatus status = SearchStatus::failed;
  Point point;
};

class LineSearch {
 public:
  LineSearch(const ValueGradient& fg, const RVector& x, double f0, const RVector& g0, const RVector& p,
             const LineSearchParams& params)
      : fg_(fg), x_(x), p_(p), params_(params) {
    origin_.f = f0;
    origin_.slope = g0.dot(p);
    origin_.x = x;
    origin_.g = g0;
  }

  SearchOutcome run(double alpha_init) {
    Point prev = origin_;
    double alpha = alpha_init;
    for (int i = 0; i < params_.max_evals; ++i) {
      Point cur = eval(alpha);
      if (!armijo(cur) || (i > 0 && cur.f >= prev.f)) return zoom(prev, cur);
      if (std::abs(cur.slope) <= -params_.c2 * origin_.slope) return {SearchStatus::strong_wolfe, cur};
      if (cur.slope >= 0.0) return zoom(cur, prev);
      prev = cur;
      alpha *= 2.0;
    }
    return finish();
  }

  int evaluations() const { return evals_; }

 private:
  Point eval(double alpha) {
    ++evals_;
    Point pt;
    pt.alpha = alpha;
    pt.x = x_ + alpha * p_;
    pt.f = fg_(pt.x, pt.g);
    pt.slope = std::isfinite(pt.f) && pt.g.allFinite() ? pt.g.dot(p_) : std::numeric_limits<double>::quiet_NaN();
    if (!std::isfinite(pt.f)) pt.f = std::numeric_limits<double>::infinity();
    if (armijo(pt) && (!best_ || pt.f < best_->f)) best_ = pt;
    return pt;
  }

  bool armijo(const Point& pt) const {
    return std::isfinite(pt.f) && pt.f <= origin_.f + params_.c1 * pt.alpha * origin_.slope;
  }

  // Minimizer of the cubic matching f and slope at both ends, safeguarded to
  // the interior of [lo, hi].
  static double interpolate(const Point& lo, const Point& hi) {
    const double a = lo.alpha, b = hi.alpha;
    const double lo_edge = std::min(a, b), hi_edge = std::max(a, b);
    const double margin = 0.1 * (hi_edge - lo_edge);
    double t = 0.5 * (a + b);
    if (std::isfinite(lo.slope) && std::isfinite(hi.slope) && std::isfinite(hi.f)) {
      const double d1 = lo.slope + hi.slope - 3.0 * (lo.f - hi.f) / (a - b);
      const double disc = d1 * d1 - lo.slope * hi.slope;
      if (disc >= 0.0) {
        const double d2 = std::copysign(std::sqrt(disc), b - a);
        const double denom = hi.slope - lo.slope + 2.0 * d2;
        if (denom != 0.0) {
          const double cand = b - (b - a) * (hi.slope + d2 - d1) / denom;
          if (std::isfinite(cand)) t = cand;
        }
      }
    }
    return std::clamp(t, lo_edge + margin, hi_edge - margin);
  }

  SearchOutcome zoom(Point lo, Point hi) {
    while (evals_ < params_.max_evals) {
      if (std::abs(hi.alpha - lo.alpha) <= std::numeric_limits<double>::epsilon() * std::max(1.0, lo.alpha)) break;
      Point cur = eval(interpolate(lo, hi));
      if (!armijo(cur) || cur.f >= lo.f) {
        hi = cur;
      } else {
        if (std::abs(cur.slope) <= -params_.c2 * origin_.slope) return {SearchStatus::strong_wolfe, cur};
        if (cur.slope * (hi.alpha - lo.alpha) >= 0.0) hi = lo;
        lo = cur;
      }
    }
    return finish();
  }

  SearchOutcome finish() const {
    if (best_ && best_->f < origin_.f) return {SearchStatus::sufficient_decrease, *best_};
    return {SearchStatus::failed, origin_};
  }

  const ValueGradient& fg_;
  const RVector& x_;
  const RVector& p_;
  LineSearchParams params_;
  Point origin_;
  std::optional<Point> best_;
  int evals_ = 0;
};

// Gradients below this are treated as exact stationarity.
constexpr double kGradFloor = 1e-15;

} // namespace

OptimResult bfgs_minimize(const ValueGradient& fg, const RVector& x0, const OptimConfig& cfg,
                          const LineSearchParams& ls) {
  cfg.validate();
  const auto start = Clock::now();
  const Eigen::Index n = x0.size();

  OptimResult res;
  res.best_point = x0;
  RVector g;
  double f = fg(x0, g);
  res.best_value = f;
  res.history.push_back(f);
  if (!std::isfinite(f) || !g.allFinite()) {
    res.wall_time = seconds_since(start);
    return res;
  }

  RVector x = x0;
  Eigen::MatrixXd h = Eigen::MatrixXd::Identity(n, n);
  bool fresh = true; // h is the identity, no curvature information yet
  int small_decreases = 0;

  while (res.iterations < cfg.max_iters) {
    if (g.lpNorm<Eigen::Infinity>() <= kGradFloor) {
      res.converged = true;
      break;
    }
    RVector p = -h * g;
    if (!(g.dot(p) < 0.0)) {
      h.setIdentity();
      fresh = true;
      p = -g;
    }
    const double alpha0 = fresh && res.iterations == 0 ? std::min(1.0, 1.0 / g.norm()) : 1.0;
    SearchOutcome out = LineSearch(fg, x, f, g, p, ls).run(alpha0);
    if (out.status == SearchStatus::failed) {
      if (!fresh) {
        h.setIdentity();
        fresh = true;
        continue;
      }
      break;
    }

    ++res.iterations;
    const RVector s = out.point.x - x;
    const RVector y = out.point.g - g;
    const double df = f - out.point.f;
    x = out.point.x;
    f = out.point.f;
    g = out.point.g;
    res.history.push_back(f);
    res.best_point = x;
    res.best_value = f;

    // A single tiny decrease can come from a short step far from the optimum,
    // so the value test must hold on two consecutive steps.
    small_decreases = std::abs(df) < cfg.tol_fun ? small_decreases + 1 : 0;
    if (s.norm() < cfg.tol_x || small_decreases >= 2) {
      res.converged = true;
      break;
    }

    const double ys = y.dot(s);
    if (ys > std::numeric_limits<double>::epsilon() * s.norm() * y.norm()) {
      if (fresh) h *= ys / y.squaredNorm();
      const double rho = 1.0 / ys;
      const RVector hy = h * y;
      // H+ = (I - rho s y^T) H (I - rho y s^T) + rho s s^T, expanded
      h += rho * ((1.0 + rho * y.dot(hy)) * (s * s.transpose()) - hy * s.transpose() - s * hy.transpose());
      fresh = false;
    }
  }

  res.wall_time = seconds_since(start);
  return res;
}

OptimResult bfgs_minimize(const Objective& f, const Gradient& grad, const RVector& x0, const OptimConfig& cfg,
                          const LineSearchParams& ls) {
  const ValueGradient fg = [&](const RVector& x, RVector& g) {
    g = grad(x);
    return f(x);
  };
  return bfgs_minimize(fg, x0, cfg, ls);
}

std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

OptimResult multi_start(const ValueGradient& fg, const Sampler& sampler, const OptimConfig& cfg,
                        const std::vector<RVector>& seeds, const RunObserver& observer) {
  cfg.validate();
  if (seeds.empty() && cfg.restarts < 1) throw std::invalid_argument("multi_start: no starting points");
  const auto start = Clock::now();

  std::optional<OptimResult> best;
  int total_iters = 0;
  std::vector<double> run_values;
  auto consider = [&](OptimResult run) {
    total_iters += run.iterations;
    run_values.push_back(run.best_value);
    if (observer) observer(run);
    if (!best || run.best_value < best->best_value - cfg.tol_fun || !std::isfinite(best->best_value))
      best = std::move(run);
  };

  for (const RVector& x0 : seeds) consider(bfgs_minimize(fg, x0, cfg));
  for (int r = 0; r < cfg.restarts; ++r) {
    auto rng = substream(cfg.seed, static_cast<std::uint64_t>(r));
    consider(bfgs_minimize(fg, sampler(rng), cfg));
  }

  OptimResult out = std::move(*best);
  out.iterations = total_iters;
  out.restarts_used = static_cast<int>(run_values.size());
  out.run_values = std::move(run_values);
  out.history.clear();
  out.wall_time = seconds_since(start);
  return out;
}

OptimResult multi_start(const Objective& f, const Gradient& grad, const Sampler& sampler, const OptimConfig& cfg,
                        const std::vector<RVector>& seeds, const RunObserver& observer) {
  const ValueGradient fg = [&](const RVector& x, RVector& g) {
    g = grad(x);
    return f(x);
  };
  return multi_start(fg, sampler, cfg, seeds, observer);
}

Sampler uniform_box_sampler(RVector lo, RVector hi) {
  if (lo.size() != hi.size()) throw std::invalid_argument("uniform_box_sampler: bound size mismatch");
  return [lo = std::move(lo), hi = std::move(hi)](std::mt19937_64& rng) {
    RVector x(lo.size());
    for (Eigen::Index i = 0; i < lo.size(); ++i) x(i) = std::uniform_real_distribution<double>(lo(i), hi(i))(rng);
    return x;
  };
}

ValueGradient with_central_differences(Objective f, double h) {
  return [f = std::move(f), h](const RVector& x, RVector& g) {
    g.resize(x.size());
    RVector probe = x;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      probe(i) = x(i) + h;
      const double up = f(probe);
      probe(i) = x(i) - h;
      const double down = f(probe);
      probe(i) = x(i);
      g(i) = (up - down) / (2.0 * h);
    }
    return f(x);
  };
}

} // namespace gmx
