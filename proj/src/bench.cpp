#include "gmx/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "gmx/heuristic.hpp"
#include "gmx/phi_scheme.hpp"
#include "gmx/xform.hpp"

#ifndef GMX_GIT_DESCRIBE
#define GMX_GIT_DESCRIBE "unknown"
#endif

namespace gmx {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void check_sweep_n(int n) {
  if (n < 2 || n > 7) throw std::invalid_argument("sweep: n must be in [2, 7]");
}

} // namespace

std::vector<double> uniform_unit_grid(int points) {
  if (points < 1) throw std::invalid_argument("uniform_unit_grid: need at least one point");
  std::vector<double> grid(points, 0.0);
  for (int k = 1; k < points; ++k) grid[k] = static_cast<double>(k) / (points - 1);
  return grid;
}

std::vector<double> log_grid(double lo, double hi, int points) {
  if (points < 1 || !(lo > 0.0) || !(hi >= lo)) throw std::invalid_argument("log_grid: need 0 < lo <= hi, points >= 1");
  std::vector<double> grid(points, lo);
  const double step = points > 1 ? std::log(hi / lo) / (points - 1) : 0.0;
  for (int k = 1; k < points; ++k) grid[k] = lo * std::exp(step * k);
  if (points > 1) grid.back() = hi;
  return grid;
}

DensityMatrix family_state(const std::string& family, int n, double parameter) {
  if (family == "ds") {
    if (parameter < 0.0 || parameter > 1.0) throw std::invalid_argument("family_state: tau must lie in [0, 1]");
    return diagonal_symmetric(tau_populations(n, parameter));
  }
  if (family == "dicke") {
    if (parameter < 0.0) throw std::invalid_argument("family_state: gamma must be non-negative");
    return dicke_steady_state({n, parameter});
  }
  throw std::invalid_argument("family_state: unknown family '" + family + "'");
}

SweepRecord evaluate_point(const std::string& family, int n, double parameter, const OptimConfig& cfg, bool with_phi) {
  const DensityMatrix rho = family_state(family, n, parameter);
  SweepRecord rec{family, n, parameter, 0.0, 0.0, std::nullopt, 0.0, std::nullopt};

  const auto t0 = Clock::now();
  const XHeuristicResult x = x_heuristic(rho, cfg);
  rec.time_x_s = seconds_since(t0);
  rec.c_x = x.estimate;
  rec.f_min = x.f_min;

  if (with_phi) {
    const auto t1 = Clock::now();
    const PhiEstimate phi = c_phi_estimate(rho, cfg, {LUParams::identity(n), x.params});
    rec.time_phi_s = seconds_since(t1);
    rec.c_phi = phi.estimate;
  }
  return rec;
}

std::vector<SweepRecord> sweep_ds(int n, int n_points, const OptimConfig& cfg, bool with_phi) {
  check_sweep_n(n);
  std::vector<SweepRecord> rows;
  for (double tau : uniform_unit_grid(n_points)) rows.push_back(evaluate_point("ds", n, tau, cfg, with_phi));
  return rows;
}

std::vector<SweepRecord> sweep_dicke(int n, const std::vector<double>& gammas, const OptimConfig& cfg, bool with_phi) {
  check_sweep_n(n);
  std::vector<SweepRecord> rows;
  for (double gamma : gammas) rows.push_back(evaluate_point("dicke", n, gamma, cfg, with_phi));
  return rows;
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& rows) {
  const auto opt = [](const std::optional<double>& v) { return v ? format_real(*v) : std::string(); };
  out << kSweepCsvHeader << '\n';
  for (const SweepRecord& r : rows) {
    out << r.family << ',' << r.n_qubits << ',' << format_real(r.parameter) << ',' << format_real(r.c_x) << ','
        << format_real(r.f_min) << ',' << opt(r.c_phi) << ',' << format_real(r.time_x_s) << ',' << opt(r.time_phi_s)
        << '\n';
  }
}

Method parse_method(const std::string& name) {
  if (name == "x") return Method::x;
  if (name == "phi") return Method::phi;
  throw std::invalid_argument("unknown method '" + name + "' (expected x or phi)");
}

std::string method_name(Method m) { return m == Method::x ? "x" : "phi"; }

std::array<double, 5> five_number_summary(std::vector<double> sample) {
  if (sample.empty()) throw std::invalid_argument("five_number_summary: empty sample");
  std::sort(sample.begin(), sample.end());
  const auto quantile = [&](double q) {
    const double pos = q * static_cast<double>(sample.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, sample.size() - 1);
    return sample[lo] + (pos - static_cast<double>(lo)) * (sample[hi] - sample[lo]);
  };
  return {sample.front(), quantile(0.25), quantile(0.5), quantile(0.75), sample.back()};
}

TimingSummary bench_timing(const std::string& family, int n, double parameter, double threshold, Method method,
                           int reps, const OptimConfig& cfg, double budget_s) {
  if (threshold < 0.0) throw std::invalid_argument("bench_timing: threshold must be non-negative");
  if (reps < 1) throw std::invalid_argument("bench_timing: reps must be at least 1");
  if (!(budget_s > 0.0)) throw std::invalid_argument("bench_timing: budget must be positive");
  cfg.validate();

  const DensityMatrix rho = family_state(family, n, parameter);
  const PenaltyObjective penalty(rho);
  const PhiObjective phi(rho);
  const ValueGradient penalty_fg = [&](const RVector& x, RVector& g) { return penalty.value_and_gradient(x, g); };
  const ValueGradient phi_fg = with_central_differences([&](const RVector& x) { return -phi.value(x); });
  const Sampler sampler = method == Method::x ? lu_angle_sampler(n) : phi_angle_sampler(n);

  // One optimizer run from a fresh random start; returns the estimate it reaches.
  const auto attempt = [&](std::mt19937_64& rng) {
    const RVector x0 = sampler(rng);
    if (method == Method::x) {
      const OptimResult r = bfgs_minimize(penalty_fg, x0, cfg);
      return x_concurrence(x_projection(penalty.transformed(r.best_point), n));
    }
    const OptimResult r = bfgs_minimize(phi_fg, x0, cfg);
    return std::max(0.0, -2.0 * r.best_value);
  };

  TimingSummary summary;
  summary.method = method_name(method);
  summary.n_qubits = n;
  summary.repetitions = reps;
  std::uint64_t attempt_index = 0;
  for (int rep = 0; rep < reps; ++rep) {
    double elapsed = 0.0;
    bool reached = false;
    while (!reached && elapsed < budget_s) {
      std::mt19937_64 rng = substream(cfg.seed, attempt_index++);
      ++summary.total_attempts;
      const auto t0 = Clock::now();
      const double estimate = attempt(rng);
      elapsed += seconds_since(t0);
      reached = estimate >= threshold - 1e-9;
    }
    if (!reached) summary.complete = false;
    summary.times.push_back(elapsed);
  }
  summary.five_number = five_number_summary(summary.times);
  return summary;
}

std::string build_version() { return GMX_GIT_DESCRIBE; }

std::string RunManifest::to_json() const {
  nlohmann::ordered_json doc;
  doc["command"] = command;
  doc["git_describe"] = build_version();
  doc["prng"] = "mt19937_64";
  doc["seed"] = cfg.seed;
  doc["tol_x"] = cfg.tol_x;
  doc["tol_fun"] = cfg.tol_fun;
  doc["max_iters"] = cfg.max_iters;
  doc["restarts"] = cfg.restarts;
  doc["line_search"] = "strong Wolfe, c1=1e-4, c2=0.9, cubic interpolation, at most 40 evaluations";
  doc["sampler_x"] = "theta uniform in [0, pi), phi uniform in [0, 2pi) per qubit";
  doc["sampler_phi"] = "theta uniform in [0, pi), phi uniform in [0, 2pi) for each of the 2N single-qubit kets";
  for (const auto& [key, value] : notes) doc["notes"][key] = value;
  for (const auto& [key, value] : metrics) doc["metrics"][key] = value;
  return doc.dump(2);
}

} // namespace gmx
