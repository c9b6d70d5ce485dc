#include "gmx/xform.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace gmx {

XParams x_projection(const CMatrix& rho, int n_qubits) {
  const Eigen::Index dim = dim_of(n_qubits);
  if (rho.rows() != dim || rho.cols() != dim) throw std::invalid_argument("x_projection: dimension mismatch");
  const std::size_t half = static_cast<std::size_t>(dim / 2);
  XParams x{n_qubits, std::vector<double>(half), std::vector<double>(half), std::vector<double>(half),
            std::vector<double>(half)};
  for (std::size_t k = 0; k < half; ++k) {
    const Eigen::Index i = static_cast<Eigen::Index>(k);
    const Eigen::Index mirror = dim - 1 - i;
    x.a[k] = rho(i, i).real();
    x.b[k] = rho(mirror, mirror).real();
    const Complex corner = rho(i, mirror);
    x.r[k] = std::abs(corner);
    if (x.r[k] < 1e-14) {
      x.phi[k] = 0.0;
    } else {
      double angle = std::arg(corner);
      if (angle < 0.0) angle += 2.0 * std::numbers::pi;
      if (angle >= 2.0 * std::numbers::pi) angle = 0.0;
      x.phi[k] = angle;
    }
  }
  return x;
}

CMatrix x_reconstruct(const XParams& x) {
  const Eigen::Index dim = dim_of(x.n_qubits);
  CMatrix m = CMatrix::Zero(dim, dim);
  for (std::size_t k = 0; k < x.a.size(); ++k) {
    const Eigen::Index i = static_cast<Eigen::Index>(k);
    const Eigen::Index mirror = dim - 1 - i;
    m(i, i) = x.a[k];
    m(mirror, mirror) = x.b[k];
    m(i, mirror) = std::polar(x.r[k], x.phi[k]);
    m(mirror, i) = std::conj(m(i, mirror));
  }
  return m;
}

XValue x_concurrence_raw(const XParams& x) {
  const std::size_t half = x.a.size();
  if (half == 0 || x.b.size() != half || x.r.size() != half)
    throw std::invalid_argument("x_concurrence: malformed XParams");
  std::vector<double> roots(half);
  for (std::size_t j = 0; j < half; ++j) roots[j] = std::sqrt(std::max(0.0, x.a[j] * x.b[j]));
  XValue best{-std::numeric_limits<double>::infinity(), 0};
  for (std::size_t k = 0; k < half; ++k) {
    double others = 0.0;
    for (std::size_t j = 0; j < half; ++j)
      if (j != k) others += roots[j];
    const double value = 2.0 * (x.r[k] - others);
    if (value > best.c_x) best = {value, static_cast<int>(k)};
  }
  return best;
}

double x_concurrence(const XParams& x) { return std::max(0.0, x_concurrence_raw(x).c_x); }

double gm_lower_bound_x(const DensityMatrix& rho) { return x_concurrence(x_projection(rho)); }

double phi_mu_value(const CMatrix& rho, int mu) {
  const Eigen::Index dim = rho.rows();
  const Eigen::Index half = dim / 2;
  if (mu < 0 || mu >= half) throw std::invalid_argument("phi_mu_value: mu out of range");
  double value = std::abs(rho(mu, dim - 1 - mu));
  for (Eigen::Index nu = 0; nu < half; ++nu) {
    if (nu == mu) continue;
    value -= std::sqrt(std::max(0.0, rho(nu, nu).real() * rho(dim - 1 - nu, dim - 1 - nu).real()));
  }
  return value;
}

PhiMuBound phi_mu_bound(const DensityMatrix& rho) {
  const Eigen::Index half = rho.dim() / 2;
  double best = -std::numeric_limits<double>::infinity();
  int best_mu = 0;
  for (Eigen::Index mu = 0; mu < half; ++mu) {
    const double v = phi_mu_value(rho.mat(), static_cast<int>(mu));
    if (v > best) {
      best = v;
      best_mu = static_cast<int>(mu);
    }
  }
  return {std::max(0.0, 2.0 * best), best_mu};
}

} // namespace gmx
