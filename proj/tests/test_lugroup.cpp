#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gmx/lugroup.hpp"
#include "gmx/xform.hpp"

using namespace gmx;

namespace {

constexpr double kPi = std::numbers::pi;

// Explicit 2x2 entries, independent of su2().
Mat2 su2_oracle(double t, double p) {
  Mat2 u;
  u << std::cos(t), std::sin(t) * std::polar(1.0, p), -std::sin(t) * std::polar(1.0, -p), std::cos(t);
  return u;
}

// (x)_j u_j by explicit index arithmetic.
CMatrix product_oracle(const std::vector<Mat2>& us) {
  const int n = static_cast<int>(us.size());
  const Eigen::Index dim = dim_of(n);
  CMatrix out(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c) {
      Complex v = 1.0;
      for (int q = 0; q < n; ++q) v *= us[q]((r >> (n - 1 - q)) & 1, (c >> (n - 1 - q)) & 1);
      out(r, c) = v;
    }
  return out;
}

LUParams random_params(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> th(0.0, kPi), ph(0.0, 2 * kPi);
  LUParams p{n, RVector(n), RVector(n)};
  for (int q = 0; q < n; ++q) {
    p.thetas(q) = th(rng);
    p.phis(q) = ph(rng);
  }
  return p;
}

} // namespace

TEST_CASE("su2 examples and unitarity") {
  CHECK(approx_equal(su2(0.0, 1.3), Mat2::Identity(), 0.0));
  Mat2 h;
  h << 1.0, 1.0, -1.0, 1.0;
  CHECK(approx_equal(su2(kPi / 4, 0.0), h / std::sqrt(2.0), 1e-15));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> d(-10.0, 10.0);
  for (int t = 0; t < 50; ++t) {
    const double a = d(rng), b = d(rng);
    const Mat2 u = su2(a, b);
    CHECK((u * u.adjoint() - Mat2::Identity()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(std::abs(u.determinant() - 1.0) < 1e-14);
    CHECK(approx_equal(u, su2_oracle(a, b), 1e-15));
  }
}

TEST_CASE("su2 derivatives match finite differences") {
  const double h = 1e-6;
  for (double t : {0.1, 1.2, 2.9})
    for (double p : {0.0, 0.7, 4.0}) {
      CHECK(approx_equal(su2_dtheta(t, p), (su2(t + h, p) - su2(t - h, p)) / (2 * h), 1e-9));
      CHECK(approx_equal(su2_dphi(t, p), (su2(t, p + h) - su2(t, p - h)) / (2 * h), 1e-9));
    }
}

TEST_CASE("assemble") {
  CHECK(approx_equal(assemble(LUParams::identity(3)), identity<double>(8), 0.0));
  const LUParams p = LUParams::symmetric_quarter(2);
  const Mat2 h = su2_oracle(kPi / 4, 0.0);
  CHECK(approx_equal(assemble(p), product_oracle({h, h}), 1e-15));

  std::mt19937_64 rng(2);
  const LUParams r = random_params(3, rng);
  std::vector<Mat2> us;
  for (int q = 0; q < 3; ++q) us.push_back(su2_oracle(r.thetas(q), r.phis(q)));
  CHECK(approx_equal(assemble(r), product_oracle(us), 1e-14));
}

TEST_CASE("local conjugation agrees with the dense product") {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 5; ++n) {
    const LUParams p = random_params(n, rng);
    const DensityMatrix rho = random_density_matrix(n, 2, 40 + n);
    const CMatrix u = assemble(p);
    CHECK(approx_equal(conjugate(rho, p).mat(), u * rho.mat() * u.adjoint(), 1e-13));
    CMatrix left = rho.mat();
    std::vector<Mat2> us;
    for (int q = 0; q < n; ++q) us.push_back(su2(p.thetas(q), p.phis(q)));
    apply_local_left(left, us);
    CHECK(approx_equal(left, u * rho.mat(), 1e-13));
  }
}

TEST_CASE("conjugate preserves the state and rejects mismatches") {
  const DensityMatrix rho = random_density_matrix(3, 3, 8);
  CHECK(approx_equal(conjugate(rho, LUParams::identity(3)).mat(), rho.mat(), 1e-15));
  std::mt19937_64 rng(4);
  const DensityMatrix out = conjugate(rho, random_params(3, rng));
  CHECK(std::abs(out.mat().trace() - Complex(1.0)) < 1e-13);
  CHECK(std::abs(herm_eig(out.mat()).eigenvalues.sum() - 1.0) < 1e-13);
  CHECK_THROWS_AS(conjugate(rho, LUParams::identity(2)), std::invalid_argument);
}

TEST_CASE("penalty at the quarter-turn point for four-qubit diagonal symmetric states") {
  const Mat2 h = su2_oracle(kPi / 4, 0.0);
  const CMatrix u = product_oracle({h, h, h, h});
  for (double tau : {0.1, 0.5, 0.9}) {
    const DensityMatrix rho = diagonal_symmetric(tau_populations(4, tau));
    const CMatrix rotated = u * rho.mat() * u.adjoint();
    double oracle = 0.0;
    for (Eigen::Index i = 0; i < 16; ++i)
      for (Eigen::Index j = i + 1; j < 16; ++j)
        if (i + j != 15) oracle += std::norm(rotated(i, j));
    CHECK(penalty_f(conjugate(rho, LUParams::symmetric_quarter(4))) == doctest::Approx(oracle).epsilon(1e-13));
  }
}

TEST_CASE("penalty gradient") {
  for (int n = 3; n <= 6; ++n)
    for (double tau : {0.1, 0.5, 0.9}) {
      const DensityMatrix rho = diagonal_symmetric(tau_populations(n, tau));
      CHECK(grad_penalty(rho, LUParams::symmetric_quarter(n)).norm() < 1e-8);
    }
  const DensityMatrix x = diagonal_symmetric(tau_populations(2, 0.3));
  CHECK(penalty_f(x) == 0.0);
  CHECK(grad_penalty(x, LUParams::identity(2)).norm() < 1e-8);

  std::mt19937_64 rng(6);
  for (int t = 0; t < 30; ++t) {
    const int n = 2 + t % 4;
    const DensityMatrix rho = random_density_matrix(n, 1 + t % 4, 900 + t);
    const LUParams p = random_params(n, rng);
    const RVector g = grad_penalty(rho, p);
    const RVector fd = grad_penalty_fd(rho, p);
    CHECK((g - fd).norm() <= 1e-6 * std::max(1.0, fd.norm()));
    RVector g2;
    const double v = PenaltyObjective(rho).value_and_gradient(p.flat(), g2);
    CHECK(v == doctest::Approx(penalty_f(conjugate(rho, p))).epsilon(1e-13));
    CHECK((g2 - g).norm() == 0.0);
  }
}

TEST_CASE("LUParams flat layout and canonical form") {
  LUParams p{2, RVector(2), RVector(2)};
  p.thetas << 0.1, 0.2;
  p.phis << 0.3, 0.4;
  const RVector f = p.flat();
  CHECK(f(0) == 0.1);
  CHECK(f(1) == 0.2);
  CHECK(f(2) == 0.3);
  CHECK(f(3) == 0.4);
  const LUParams back = LUParams::from_flat(2, f);
  CHECK(back.thetas == p.thetas);
  CHECK(back.phis == p.phis);

  LUParams wild{1, RVector::Constant(1, -kPi / 4), RVector::Constant(1, 7.0)};
  const LUParams c = wild.canonical();
  CHECK(c.thetas(0) == doctest::Approx(3 * kPi / 4));
  CHECK(c.phis(0) == doctest::Approx(7.0 - 2 * kPi));
  CHECK_THROWS_AS(LUParams::from_flat(2, RVector(3)), std::invalid_argument);
}
