#include <doctest.h>

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "gmx/bench.hpp"
#include "gmx/xform.hpp"

using namespace gmx;

TEST_CASE("grids") {
  CHECK(uniform_unit_grid(1) == std::vector<double>{0.0});
  CHECK(uniform_unit_grid(5) == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  CHECK(uniform_unit_grid(100).size() == 100);
  const auto g = log_grid(0.1, 20.0, 60);
  REQUIRE(g.size() == 60);
  CHECK(g.front() == 0.1);
  CHECK(g.back() == 20.0);
  for (std::size_t k = 2; k < g.size(); ++k) CHECK(g[k] / g[k - 1] == doctest::Approx(g[1] / g[0]).epsilon(1e-12));
  CHECK_THROWS_AS(log_grid(0.0, 1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(uniform_unit_grid(0), std::invalid_argument);
}

TEST_CASE("five-number summary") {
  const auto s = five_number_summary({5.0, 1.0, 3.0, 2.0, 4.0});
  CHECK(s == std::array<double, 5>{1.0, 2.0, 3.0, 4.0, 5.0});
  const auto t = five_number_summary({1.0, 2.0, 3.0, 4.0});
  CHECK(t[1] == doctest::Approx(1.75));
  CHECK(t[2] == doctest::Approx(2.5));
  CHECK(t[3] == doctest::Approx(3.25));
  const auto one = five_number_summary({7.0});
  CHECK(one == std::array<double, 5>{7.0, 7.0, 7.0, 7.0, 7.0});
  CHECK_THROWS_AS(five_number_summary({}), std::invalid_argument);
}

TEST_CASE("family states") {
  CHECK(approx_equal(family_state("ds", 3, 0.4).mat(), diagonal_symmetric(tau_populations(3, 0.4)).mat(), 0.0));
  CHECK(approx_equal(family_state("dicke", 3, 1.2).mat(), dicke_steady_state({3, 1.2}).mat(), 0.0));
  CHECK_THROWS_AS(family_state("ds", 3, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(family_state("dicke", 3, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(family_state("ghz", 3, 0.0), std::invalid_argument);
}

TEST_CASE("sweep CSV") {
  OptimConfig cfg;
  cfg.restarts = 3;
  const auto rows = sweep_ds(2, 5, cfg, true);
  REQUIRE(rows.size() == 5);
  for (const SweepRecord& r : rows) {
    REQUIRE(r.c_phi.has_value());
    CHECK(std::abs(r.c_x - *r.c_phi) < 1e-9);
    CHECK(r.c_x >= 0.0);
    CHECK(std::isfinite(r.f_min));
  }
  std::ostringstream csv;
  write_sweep_csv(csv, rows);
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == kSweepCsvHeader);
  int count = 0;
  while (std::getline(lines, line)) ++count;
  CHECK(count == 5);

  const auto x_only = sweep_dicke(2, {0.5, 2.0}, cfg, false);
  std::ostringstream csv2;
  write_sweep_csv(csv2, x_only);
  CHECK(csv2.str().find(",,") != std::string::npos);
  CHECK(csv2.str().back() == '\n');
  CHECK(x_only[1].c_x == doctest::Approx(1.0 / 14).epsilon(1e-10));
  CHECK_THROWS_AS(sweep_ds(8, 3, cfg, false), std::invalid_argument);
  CHECK_THROWS_AS(sweep_dicke(1, {1.0}, cfg, false), std::invalid_argument);
}

TEST_CASE("format_real round-trips") {
  for (double v : {0.1, 1.0 / 3.0, 7.735e-2, 0.0, 1e-300}) CHECK(std::stod(format_real(v)) == v);
}

TEST_CASE("bench_timing on an easy target") {
  const double threshold = gm_lower_bound_x(family_state("ds", 2, 0.0303));
  const TimingSummary s = bench_timing("ds", 2, 0.0303, threshold, Method::x, 5, OptimConfig{}, 60.0);
  CHECK(s.complete);
  CHECK(s.repetitions == 5);
  CHECK(s.total_attempts >= 5);
  CHECK(s.times.size() == 5);
  CHECK(s.five_number[4] < 1.0);
  for (int k = 0; k < 4; ++k) CHECK(s.five_number[k] <= s.five_number[k + 1]);
  CHECK(s.method == "x");
}

TEST_CASE("bench_timing budget marks the summary incomplete") {
  OptimConfig cfg;
  cfg.max_iters = 5;
  const TimingSummary s = bench_timing("ds", 2, 0.5, 2.0, Method::phi, 2, cfg, 0.01);
  CHECK(!s.complete);
  CHECK(s.total_attempts >= 2);
  CHECK_THROWS_AS(bench_timing("ds", 2, 0.5, -1.0, Method::x, 1, cfg, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(bench_timing("ds", 2, 0.5, 0.1, Method::x, 0, cfg, 1.0), std::invalid_argument);
}

TEST_CASE("methods and manifest") {
  CHECK(parse_method("x") == Method::x);
  CHECK(parse_method("phi") == Method::phi);
  CHECK_THROWS_AS(parse_method("both"), std::invalid_argument);
  CHECK(method_name(Method::phi) == "phi");

  RunManifest m{"gmx test", OptimConfig{}, {{"median_x_s", 0.5}}, {{"family", "ds"}}};
  m.cfg.seed = 99;
  const auto doc = nlohmann::json::parse(m.to_json());
  CHECK(doc.at("seed") == 99);
  CHECK(doc.at("prng") == "mt19937_64");
  CHECK(doc.at("tol_x") == 1e-11);
  CHECK(doc.at("restarts") == 20);
  CHECK(doc.at("metrics").at("median_x_s") == 0.5);
  CHECK(doc.at("notes").at("family") == "ds");
  CHECK(!doc.at("git_describe").get<std::string>().empty());
}
