// gmx: sweeps, single-state estimates, timing benchmarks and self-checks for
// the X-heuristic and product-state lower bounds on GM-concurrence.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gmx/bench.hpp"
#include "gmx/heuristic.hpp"
#include "gmx/io.hpp"
#include "gmx/phi_scheme.hpp"
#include "gmx/reference.hpp"
#include "gmx/wootters.hpp"
#include "gmx/xform.hpp"

namespace {

using namespace gmx;

// GMX_TOL overrides both termination tolerances.
OptimConfig base_config(std::uint64_t seed, std::optional<int> restarts) {
  OptimConfig cfg;
  cfg.seed = seed;
  if (restarts) cfg.restarts = *restarts;
  if (const char* env = std::getenv("GMX_TOL")) {
    char* end = nullptr;
    const double tol = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(tol > 0.0) || !std::isfinite(tol))
      throw std::invalid_argument(std::string("GMX_TOL must be a positive number, got '") + env + "'");
    cfg.tol_x = tol;
    cfg.tol_fun = tol;
  }
  cfg.validate();
  return cfg;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
}

// CSV to --out (or stdout); the manifest goes next to it as <out>.manifest.json.
void emit_sweep(const std::vector<SweepRecord>& rows, const std::string& out_path, RunManifest manifest) {
  double total_x = 0.0;
  for (const SweepRecord& r : rows) total_x += r.time_x_s;
  manifest.metrics["rows"] = static_cast<double>(rows.size());
  manifest.metrics["total_time_x_s"] = total_x;
  if (out_path.empty()) {
    write_sweep_csv(std::cout, rows);
    return;
  }
  std::ostringstream csv;
  write_sweep_csv(csv, rows);
  write_text(out_path, csv.str());
  write_text(out_path + ".manifest.json", manifest.to_json() + "\n");
}

std::string joined_args(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) s += (i ? " " : "") + std::string(argv[i]);
  return s;
}

// Self-checks; returns the number of failed checks.
int run_verify() {
  int failures = 0;
  const auto report = [&](bool ok, const std::string& what, double measured) {
    std::printf("%s %s (%.3g)\n", ok ? "ok  " : "FAIL", what.c_str(), measured);
    if (!ok) ++failures;
  };

  double identity_dev = 0.0;
  for (int t = 0; t < 400; ++t) {
    const int n = 2 + t % 4;
    const DensityMatrix rho = random_density_matrix(n, 1 + (t / 4) % (1 << n), 0x5eed0000u + t);
    double best = -INFINITY;
    for (int mu = 0; mu < (1 << (n - 1)); ++mu) best = std::max(best, i_phi(rho, phi_mu_params(n, mu)));
    identity_dev = std::max(identity_dev, std::abs(std::max(0.0, 2.0 * best) - gm_lower_bound_x(rho)));
  }
  report(identity_dev <= 1e-12, "max_mu 2 I_mu = C_X on 400 random states", identity_dev);

  double golden_dev = 0.0;
  for (int n = 2; n <= 4; ++n) {
    for (double p : {0.0, 0.13, 0.5, 0.77, 1.0}) {
      const DiagSymParams pops = tau_populations(n, p);
      golden_dev = std::max(golden_dev,
                            (diagonal_symmetric(pops).mat() - reference::diagonal_symmetric(n, pops.populations))
                                .cwiseAbs()
                                .maxCoeff());
    }
    for (double g : {0.0, 0.4, 1.0, 1.65, 6.0})
      golden_dev = std::max(
          golden_dev, (dicke_steady_state({n, g}).mat() - reference::dicke_steady_state(n, g)).cwiseAbs().maxCoeff());
  }
  report(golden_dev <= 1e-12, "family states match the tabulated matrices (N = 2, 3, 4)", golden_dev);

  std::vector<double> gammas;
  for (int k = 0; k < 50; ++k) gammas.push_back(10.0 * k / 49.0);
  const Dicke2Report d2 = verify_dicke2_equality(gammas);
  report(d2.max_deviation() < 1e-10, "two-qubit Dicke: C_W = C_X = closed form", d2.max_deviation());

  double trivial = 0.0;
  for (int n : {3, 4})
    for (int k = 0; k < 20; ++k) trivial = std::max(trivial, gm_lower_bound_x(dicke_steady_state({n, 0.5 * k})));
  report(trivial == 0.0, "C_X of the untransformed 3- and 4-qubit steady states is 0", trivial);
  return failures;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"gmx - lower bounds on genuine multipartite concurrence"};
  app.require_subcommand(1);
  const std::string command_line = joined_args(argc, argv);

  int n = 2;
  int points = 100;
  bool with_phi = false;
  std::uint64_t seed = 0;
  std::optional<int> restarts;
  std::string out_path;

  auto* sweep_ds_cmd = app.add_subcommand("sweep-ds", "X-heuristic (and optionally product-state) sweep over tau");
  sweep_ds_cmd->add_option("--n", n, "number of qubits (2-7)")->required()->check(CLI::Range(2, 7));
  sweep_ds_cmd->add_option("--points", points, "uniform tau grid size on [0, 1]")->check(CLI::PositiveNumber);
  sweep_ds_cmd->add_flag("--phi", with_phi, "also run the product-state scheme");
  sweep_ds_cmd->add_option("--seed", seed, "PRNG seed");
  sweep_ds_cmd->add_option("--restarts", restarts, "random restarts per optimization")->check(CLI::NonNegativeNumber);
  sweep_ds_cmd->add_option("--out", out_path, "CSV output path (default: stdout)");

  double gamma_min = 0.1;
  double gamma_max = 20.0;
  int dicke_points = 60;
  auto* sweep_dicke_cmd = app.add_subcommand("sweep-dicke", "sweep over gamma on a log-spaced grid");
  sweep_dicke_cmd->add_option("--n", n, "number of qubits (2-7)")->required()->check(CLI::Range(2, 7));
  sweep_dicke_cmd->add_option("--gamma-min", gamma_min, "smallest gamma (> 0)")->check(CLI::PositiveNumber);
  sweep_dicke_cmd->add_option("--gamma-max", gamma_max, "largest gamma")->check(CLI::PositiveNumber);
  sweep_dicke_cmd->add_option("--points", dicke_points, "grid size")->check(CLI::PositiveNumber);
  sweep_dicke_cmd->add_flag("--phi", with_phi, "also run the product-state scheme");
  sweep_dicke_cmd->add_option("--seed", seed, "PRNG seed");
  sweep_dicke_cmd->add_option("--restarts", restarts, "random restarts per optimization")->check(CLI::NonNegativeNumber);
  sweep_dicke_cmd->add_option("--out", out_path, "CSV output path (default: stdout)");

  std::string state_path;
  std::string method = "both";
  auto* estimate_cmd = app.add_subcommand("estimate", "estimate bounds for a density matrix read from JSON");
  estimate_cmd->add_option("--state", state_path, "JSON file {n_qubits, re, im}")->required()->check(CLI::ExistingFile);
  estimate_cmd->add_option("--method", method, "x, phi or both")->check(CLI::IsMember({"x", "phi", "both"}));
  estimate_cmd->add_option("--restarts", restarts, "random restarts per optimization")->check(CLI::NonNegativeNumber);
  estimate_cmd->add_option("--seed", seed, "PRNG seed");

  std::string family = "ds";
  double param = 0.0;
  int reps = 10;
  double budget = 600.0;
  std::optional<double> threshold;
  std::string manifest_path;
  auto* bench_cmd = app.add_subcommand("bench", "time random-start runs until they reach a threshold");
  bench_cmd->add_option("--family", family, "ds or dicke")->required()->check(CLI::IsMember({"ds", "dicke"}));
  bench_cmd->add_option("--n", n, "number of qubits (2-7)")->required()->check(CLI::Range(2, 7));
  bench_cmd->add_option("--param", param, "tau or gamma")->required();
  bench_cmd->add_option("--method", method, "x or phi")->required()->check(CLI::IsMember({"x", "phi"}));
  bench_cmd->add_option("--reps", reps, "repetitions")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--budget", budget, "seconds allowed per repetition")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--threshold", threshold, "target estimate (default: warm-started X-heuristic estimate)");
  bench_cmd->add_option("--seed", seed, "PRNG seed");
  bench_cmd->add_option("--manifest", manifest_path, "write a JSON run manifest here");

  app.add_subcommand("verify", "run the built-in identity and golden-matrix checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sweep_ds_cmd->parsed()) {
      const OptimConfig cfg = base_config(seed, restarts);
      RunManifest manifest{command_line, cfg, {}, {{"family", "ds"}, {"grid", "tau = k / (points - 1)"}}};
      emit_sweep(sweep_ds(n, points, cfg, with_phi), out_path, manifest);
    } else if (sweep_dicke_cmd->parsed()) {
      if (gamma_max < gamma_min) throw std::invalid_argument("--gamma-max must be >= --gamma-min");
      const OptimConfig cfg = base_config(seed, restarts);
      RunManifest manifest{command_line, cfg, {}, {{"family", "dicke"}, {"grid", "log-spaced gamma"}}};
      emit_sweep(sweep_dicke(n, log_grid(gamma_min, gamma_max, dicke_points), cfg, with_phi), out_path, manifest);
    } else if (estimate_cmd->parsed()) {
      const OptimConfig cfg = base_config(seed, restarts);
      std::ifstream in(state_path);
      const DensityMatrix rho = read_density_matrix(in);
      std::printf("n_qubits %d\n", rho.n_qubits());
      std::printf("c_x_untransformed %s\n", format_real(gm_lower_bound_x(rho)).c_str());
      std::optional<LUParams> frame;
      if (method != "phi") {
        const XHeuristicResult x = x_heuristic(rho, cfg);
        frame = x.params;
        std::printf("c_x %s\nf_min %s\nbest_cx_seen %s\n", format_real(x.estimate).c_str(),
                    format_real(x.f_min).c_str(), format_real(x.best_cx_seen).c_str());
      }
      if (method != "x") {
        std::vector<LUParams> frames{LUParams::identity(rho.n_qubits())};
        if (frame) frames.push_back(*frame);
        const PhiEstimate phi = c_phi_estimate(rho, cfg, frames);
        std::printf("c_phi %s\n", format_real(phi.estimate).c_str());
      }
    } else if (bench_cmd->parsed()) {
      const OptimConfig cfg = base_config(seed, restarts);
      const double target = threshold ? *threshold : x_heuristic(family_state(family, n, param), cfg).estimate;
      const TimingSummary s = bench_timing(family, n, param, target, parse_method(method), reps, cfg, budget);
      std::printf("method %s\nn_qubits %d\nthreshold %s\nrepetitions %d\ntotal_attempts %d\ncomplete %s\n",
                  s.method.c_str(), s.n_qubits, format_real(target).c_str(), s.repetitions, s.total_attempts,
                  s.complete ? "true" : "false");
      std::printf("min %.6g\nq1 %.6g\nmedian %.6g\nq3 %.6g\nmax %.6g\n", s.five_number[0], s.five_number[1],
                  s.five_number[2], s.five_number[3], s.five_number[4]);
      if (!manifest_path.empty()) {
        RunManifest manifest{command_line, cfg, {}, {{"family", family}, {"method", s.method}}};
        manifest.metrics = {{"threshold", target},       {"min_s", s.five_number[0]},
                            {"q1_s", s.five_number[1]},  {"median_s", s.five_number[2]},
                            {"q3_s", s.five_number[3]},  {"max_s", s.five_number[4]},
                            {"total_attempts", double(s.total_attempts)}, {"complete", s.complete ? 1.0 : 0.0}};
        write_text(manifest_path, manifest.to_json() + "\n");
      }
    } else {
      const int failures = run_verify();
      std::printf("%s\n", failures == 0 ? "all checks passed" : "some checks failed");
      return failures == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "gmx: %s\n", e.what());
    return 1;
  }
  return 0;
}
