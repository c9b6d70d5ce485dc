#include <doctest.h>

#include <cmath>
#include <random>

#include "gmx/phi_scheme.hpp"
#include "gmx/xform.hpp"

using namespace gmx;

TEST_CASE("enumerate_bipartitions") {
  const auto two = enumerate_bipartitions(2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].a_side == std::vector<int>{1});
  CHECK(two[0].b_side == std::vector<int>{2});

  const auto three = enumerate_bipartitions(3);
  REQUIRE(three.size() == 3);
  CHECK(three[0].a_side == std::vector<int>{1});
  CHECK(three[0].b_side == std::vector<int>{2, 3});
  CHECK(three[1].a_side == std::vector<int>{1, 2});
  CHECK(three[1].b_side == std::vector<int>{3});
  CHECK(three[2].a_side == std::vector<int>{1, 3});
  CHECK(three[2].b_side == std::vector<int>{2});
  CHECK(three[1].a_mask == 0b110u);

  for (int n = 2; n <= 7; ++n) {
    const auto parts = enumerate_bipartitions(n);
    CHECK(parts.size() == (1u << (n - 1)) - 1u);
    for (const Bipartition& bp : parts) {
      CHECK(!bp.b_side.empty());
      CHECK(bp.a_side.size() + bp.b_side.size() == static_cast<std::size_t>(n));
    }
  }
  CHECK(enumerate_bipartitions(5).size() == 15);
  CHECK_THROWS_AS(enumerate_bipartitions(1), std::invalid_argument);
}

TEST_CASE("i_phi direct evaluations") {
  const PhiParams zero{2, RVector::Zero(4), RVector::Zero(4)};
  CHECK(std::abs(i_phi(maximally_mixed(2), zero)) < 1e-16);
  CHECK(i_phi(ghz_state(3), phi_mu_params(3, 0)) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(i_phi(ghz_state(3), phi_mu_params(2, 0)), std::invalid_argument);
}

TEST_CASE("basis product states reproduce the closed-form I_mu") {
  for (int t = 0; t < 40; ++t) {
    const int n = 2 + t % 4;
    const DensityMatrix rho = random_density_matrix(n, 1 + t % 5 % (1 << n), 1300 + t);
    for (int mu = 0; mu < (1 << (n - 1)); ++mu)
      CHECK(std::abs(i_phi(rho, phi_mu_params(n, mu)) - phi_mu_value(rho.mat(), mu)) <= 1e-12);
  }
}

TEST_CASE("basis product states in a rotated frame") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> ang(0.0, 6.0);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + t % 3;
    LUParams frame{n, RVector(n), RVector(n)};
    for (int q = 0; q < n; ++q) {
      frame.thetas(q) = ang(rng);
      frame.phis(q) = ang(rng);
    }
    const DensityMatrix rho = random_density_matrix(n, 2, 1500 + t);
    const CMatrix rotated = conjugate(rho, frame).mat();
    for (int mu = 0; mu < (1 << (n - 1)); ++mu)
      CHECK(std::abs(i_phi(rho, phi_mu_params_in_frame(frame, mu)) - phi_mu_value(rotated, mu)) <= 1e-12);
  }
}

TEST_CASE("PhiParams flat layout") {
  const PhiParams p = phi_mu_params(2, 1);
  const RVector f = p.flat();
  REQUIRE(f.size() == 8);
  const PhiParams back = PhiParams::from_flat(2, f);
  CHECK(back.v_angles == p.v_angles);
  CHECK(back.w_angles == p.w_angles);
  CHECK_THROWS_AS(PhiParams::from_flat(2, RVector(7)), std::invalid_argument);
  CHECK_THROWS_AS(phi_mu_params(3, 4), std::invalid_argument);
}

TEST_CASE("c_phi_estimate examples") {
  OptimConfig cfg;
  cfg.restarts = 5;
  const DensityMatrix ghz_mix(3, 0.6 * ghz_state(3).mat() + 0.4 * maximally_mixed(3).mat());
  CHECK(c_phi_estimate(ghz_mix, cfg).estimate == doctest::Approx(gm_lower_bound_x(ghz_mix)).epsilon(1e-9));

  const DensityMatrix s2 = dicke_steady_state({2, 1.65});
  CHECK(std::abs(c_phi_estimate(s2, cfg).estimate - 7.735e-2) < 1e-4);

  for (double tau : {0.0, 0.2, 0.5, 0.8, 1.0}) {
    const DensityMatrix ds2 = diagonal_symmetric(tau_populations(2, tau));
    CHECK(std::abs(c_phi_estimate(ds2, cfg).estimate - gm_lower_bound_x(ds2)) < 1e-9);
  }
}

TEST_CASE("c_phi_estimate never falls below its seeds") {
  OptimConfig cfg;
  cfg.restarts = 2;
  for (int t = 0; t < 10; ++t) {
    const DensityMatrix rho = random_density_matrix(3, 1 + t % 4, 1900 + t);
    CHECK(c_phi_estimate(rho, cfg).estimate >= phi_mu_bound(rho).value - 1e-12);
  }
}
