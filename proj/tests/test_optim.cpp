#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "gmx/lugroup.hpp"
#include "gmx/optim.hpp"

using namespace gmx;

namespace {

double rosenbrock(const RVector& x, RVector& g) {
  double f = 0.0;
  g = RVector::Zero(x.size());
  for (Eigen::Index i = 0; i + 1 < x.size(); ++i) {
    const double a = x(i + 1) - x(i) * x(i);
    const double b = 1.0 - x(i);
    f += 100.0 * a * a + b * b;
    g(i) += -400.0 * x(i) * a - 2.0 * b;
    g(i + 1) += 200.0 * a;
  }
  return f;
}

// Tilted double well in x, quadratic in y: global minimum near x = -1.
double double_well(const RVector& v, RVector& g) {
  const double x = v(0), y = v(1);
  g.resize(2);
  g(0) = 4.0 * x * (x * x - 1.0) + 0.3;
  g(1) = 2.0 * y;
  return (x * x - 1.0) * (x * x - 1.0) + 0.3 * x + y * y;
}

} // namespace

TEST_CASE("quadratic bowl converges to its center") {
  RVector c(3);
  c << 1.5, -2.0, 0.25;
  const ValueGradient fg = [&](const RVector& x, RVector& g) {
    g = 2.0 * (x - c);
    return (x - c).squaredNorm();
  };
  for (const RVector& x0 : {RVector(RVector::Zero(3)), RVector(RVector::Constant(3, 40.0))}) {
    const OptimResult r = bfgs_minimize(fg, x0, OptimConfig{});
    CHECK(r.converged);
    CHECK((r.best_point - c).lpNorm<Eigen::Infinity>() < 1e-9);
    CHECK(r.history.front() >= r.history.back());
  }
}

TEST_CASE("four-variable Rosenbrock") {
  RVector x0(4);
  x0 << -1.2, 1.0, -1.2, 1.0;
  const OptimResult r = bfgs_minimize(ValueGradient(rosenbrock), x0, OptimConfig{});
  CHECK(r.best_value < 1e-12);
  CHECK((r.best_point - RVector::Ones(4)).lpNorm<Eigen::Infinity>() < 1e-5);
}

TEST_CASE("accepted values never increase") {
  RVector x0(4);
  x0 << 2.0, -1.0, 0.5, 3.0;
  const OptimResult r = bfgs_minimize(ValueGradient(rosenbrock), x0, OptimConfig{});
  for (std::size_t k = 1; k < r.history.size(); ++k) CHECK(r.history[k] <= r.history[k - 1]);
}

TEST_CASE("penalty objective started near the quarter-turn point returns to it") {
  const int n = 4;
  const DensityMatrix rho = diagonal_symmetric(tau_populations(n, 0.3));
  const PenaltyObjective obj(rho);
  const ValueGradient fg = [&](const RVector& x, RVector& g) { return obj.value_and_gradient(x, g); };
  // f is flat along a common phi shift, so only the thetas are perturbed.
  RVector x0 = LUParams::symmetric_quarter(n).flat();
  x0.head(n) += RVector::LinSpaced(n, 0.02, -0.03);
  const OptimResult r = bfgs_minimize(fg, x0, OptimConfig{});
  const LUParams p = LUParams::from_flat(n, r.best_point);
  for (int q = 0; q < n; ++q) {
    CHECK(std::abs(p.thetas(q) - std::numbers::pi / 4) < 1e-7);
    CHECK(std::abs(p.phis(q)) < 1e-7);
  }
}

TEST_CASE("a broken gradient ends the run without throwing") {
  const ValueGradient wrong = [](const RVector& x, RVector& g) {
    g = -2.0 * x; // points uphill
    return x.squaredNorm();
  };
  const RVector x0 = RVector::Constant(2, 1.0);
  OptimResult r;
  CHECK_NOTHROW(r = bfgs_minimize(wrong, x0, OptimConfig{}));
  CHECK(!r.converged);
  CHECK(r.best_value <= x0.squaredNorm());

  const ValueGradient nan_fg = [](const RVector& x, RVector& g) {
    g = RVector::Constant(x.size(), std::numeric_limits<double>::quiet_NaN());
    return std::numeric_limits<double>::quiet_NaN();
  };
  CHECK_NOTHROW(r = bfgs_minimize(nan_fg, x0, OptimConfig{}));
  CHECK(!r.converged);
  CHECK(r.best_point == x0);
}

TEST_CASE("multi_start on a single basin agrees with one start") {
  const ValueGradient fg = [](const RVector& x, RVector& g) {
    g = 2.0 * (x - RVector::Ones(x.size()));
    return (x - RVector::Ones(x.size())).squaredNorm();
  };
  const Sampler box = uniform_box_sampler(RVector::Constant(2, -5.0), RVector::Constant(2, 5.0));
  const OptimResult one = bfgs_minimize(fg, RVector::Zero(2), OptimConfig{});
  const OptimResult many = multi_start(fg, box, OptimConfig{});
  CHECK((one.best_point - many.best_point).norm() < 1e-9);
  CHECK(many.restarts_used == 20);
  CHECK(many.run_values.size() == 20);
}

TEST_CASE("multi_start finds the global basin of a double well") {
  // Grid-search oracle for the global minimizer.
  double grid_best = std::numeric_limits<double>::infinity();
  double grid_x = 0.0;
  RVector v(2), g;
  for (int i = 0; i <= 4000; ++i) {
    v << -2.0 + 4.0 * i / 4000.0, 0.0;
    const double f = double_well(v, g);
    if (f < grid_best) {
      grid_best = f;
      grid_x = v(0);
    }
  }
  const Sampler box = uniform_box_sampler(RVector::Constant(2, -2.0), RVector::Constant(2, 2.0));
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    OptimConfig cfg;
    cfg.seed = seed;
    const OptimResult r = multi_start(ValueGradient(double_well), box, cfg);
    if (std::abs(r.best_point(0) - grid_x) < 1e-3 && r.best_value <= grid_best + 1e-9) ++hits;
  }
  CHECK(hits >= 99);
}

TEST_CASE("multi_start is deterministic and keeps the earliest of tied runs") {
  const Sampler box = uniform_box_sampler(RVector::Constant(2, -2.0), RVector::Constant(2, 2.0));
  OptimConfig cfg;
  cfg.seed = 12345;
  const OptimResult a = multi_start(ValueGradient(double_well), box, cfg);
  const OptimResult b = multi_start(ValueGradient(double_well), box, cfg);
  CHECK(a.best_point == b.best_point);
  CHECK(a.best_value == b.best_value);
  CHECK(a.run_values == b.run_values);
  CHECK(a.iterations == b.iterations);

  // Symmetric objective: both seeds converge to equal values; the first wins.
  const ValueGradient sym = [](const RVector& x, RVector& g) {
    g.resize(1);
    g(0) = 4.0 * x(0) * (x(0) * x(0) - 1.0);
    return (x(0) * x(0) - 1.0) * (x(0) * x(0) - 1.0);
  };
  cfg.restarts = 0;
  const OptimResult t = multi_start(sym, uniform_box_sampler(RVector::Zero(1), RVector::Ones(1)), cfg,
                                    {RVector::Constant(1, 0.5), RVector::Constant(1, -0.5)});
  CHECK(t.best_point(0) > 0.0);
}

TEST_CASE("substreams are reproducible and distinct") {
  auto a = substream(7, 3);
  auto b = substream(7, 3);
  auto c = substream(7, 4);
  auto d = substream(8, 3);
  const auto va = a();
  CHECK(va == b());
  CHECK(va != c());
  CHECK(va != d());
}

TEST_CASE("central-difference gradients") {
  const ValueGradient fg = with_central_differences([](const RVector& x) { return std::sin(x(0)) * std::exp(x(1)); });
  RVector x(2), g;
  x << 0.4, -0.2;
  fg(x, g);
  CHECK(g(0) == doctest::Approx(std::cos(0.4) * std::exp(-0.2)).epsilon(1e-8));
  CHECK(g(1) == doctest::Approx(std::sin(0.4) * std::exp(-0.2)).epsilon(1e-8));
}

TEST_CASE("OptimConfig validation") {
  OptimConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.tol_x = -1.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = OptimConfig{};
  cfg.restarts = -1;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = OptimConfig{};
  cfg.max_iters = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}
