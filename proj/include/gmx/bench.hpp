#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gmx/optim.hpp"
#include "gmx/states.hpp"

namespace gmx {

struct SweepRecord {
  std::string family; // "ds" or "dicke"
  int n_qubits = 0;
  double parameter = 0.0; // tau or gamma
  double c_x = 0.0;
  double f_min = 0.0;
  std::optional<double> c_phi;
  double time_x_s = 0.0;
  std::optional<double> time_phi_s;
};

/// k / (points - 1) for k = 0 .. points - 1 (a single point gives {0}).
std::vector<double> uniform_unit_grid(int points);
/// `points` values log-spaced on [lo, hi], endpoints included.
std::vector<double> log_grid(double lo, double hi, int points);

/// State of a named family: "ds" -> diagonal symmetric with tau populations,
/// "dicke" -> driven Dicke steady state with gamma.
DensityMatrix family_state(const std::string& family, int n, double parameter);

/// Runs the X-heuristic and, when `with_phi`, the product-state scheme. The
/// product-state search is seeded with the basis states of both the identity
/// frame and the heuristic's optimal frame. Timings cover optimizer calls only.
SweepRecord evaluate_point(const std::string& family, int n, double parameter, const OptimConfig& cfg, bool with_phi);

std::vector<SweepRecord> sweep_ds(int n, int n_points, const OptimConfig& cfg, bool with_phi);
std::vector<SweepRecord> sweep_dicke(int n, const std::vector<double>& gammas, const OptimConfig& cfg, bool with_phi);

inline constexpr const char* kSweepCsvHeader = "family,n_qubits,parameter,c_x,f_min,c_phi,time_x_s,time_phi_s";
/// Reals as %.17g; absent optional fields as empty strings.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& rows);
std::string format_real(double v);

enum class Method { x, phi };
Method parse_method(const std::string& name);
std::string method_name(Method m);

/// (min, q1, median, q3, max); quartiles by linear interpolation between
/// order statistics. Throws on an empty sample.
std::array<double, 5> five_number_summary(std::vector<double> sample);

struct TimingSummary {
  std::string method;
  int n_qubits = 0;
  std::array<double, 5> five_number{};
  int repetitions = 0;
  int total_attempts = 0;
  bool complete = true;      // false if some repetition exhausted its budget
  std::vector<double> times; // per repetition, seconds (budget-aborted ones included)
};

/// Each repetition draws fresh uniformly random starts, one optimizer run per
/// attempt (capped at cfg.max_iters), until the estimate reaches
/// threshold - 1e-9; the repetition time sums every attempt. A repetition
/// that exceeds `budget_s` is aborted and marks the summary incomplete.
/// Attempt a uses substream(cfg.seed, a), counted across repetitions.
TimingSummary bench_timing(const std::string& family, int n, double parameter, double threshold, Method method,
                           int reps, const OptimConfig& cfg, double budget_s);

/// Reproducibility record written next to CSV output.
struct RunManifest {
  std::string command;
  OptimConfig cfg;
  std::map<std::string, double> metrics;
  std::map<std::string, std::string> notes;

  std::string to_json() const;
};

/// `git describe` of the source tree at configure time.
std::string build_version();

} // namespace gmx
