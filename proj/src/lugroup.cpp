#include "gmx/lugroup.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gmx/xform.hpp"

namespace gmx {

namespace {

double wrap(double angle, double period) {
  double r = std::fmod(angle, period);
  if (r < 0.0) r += period;
  if (r >= period) r = 0.0;
  return r;
}

std::vector<Mat2> factors_of(int n, const RVector& x) {
  std::vector<Mat2> u(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) u[j] = su2(x(j), x(n + j));
  return u;
}

void check_flat(int n, const RVector& x) {
  if (x.size() != 2 * n) throw std::invalid_argument("LUParams: flat vector must have 2N entries");
}

} // namespace

LUParams LUParams::identity(int n) { return {n, RVector::Zero(n), RVector::Zero(n)}; }

LUParams LUParams::symmetric_quarter(int n) {
  return {n, RVector::Constant(n, std::numbers::pi / 4.0), RVector::Zero(n)};
}

LUParams LUParams::from_flat(int n, const RVector& x) {
  check_flat(n, x);
  return {n, x.head(n), x.tail(n)};
}

RVector LUParams::flat() const {
  RVector x(2 * n_qubits);
  x << thetas, phis;
  return x;
}

LUParams LUParams::canonical() const {
  // su2(t + pi, p) = -su2(t, p) and su2(-t, p) = su2(t, p + pi), so every
  // factor is reachable (up to sign) with t in [0, pi), p in [0, 2 pi).
  LUParams out = *this;
  for (int j = 0; j < n_qubits; ++j) {
    out.thetas(j) = wrap(thetas(j), std::numbers::pi);
    out.phis(j) = wrap(phis(j), 2.0 * std::numbers::pi);
  }
  return out;
}

Mat2 su2(double theta, double phi) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Mat2 u;
  u << c, s * std::polar(1.0, phi), -s * std::polar(1.0, -phi), c;
  return u;
}

Mat2 su2_dtheta(double theta, double phi) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Mat2 u;
  u << -s, c * std::polar(1.0, phi), -c * std::polar(1.0, -phi), -s;
  return u;
}

Mat2 su2_dphi(double theta, double phi) {
  const double s = std::sin(theta);
  const Complex i(0.0, 1.0);
  Mat2 u;
  u << 0.0, i * s * std::polar(1.0, phi), i * s * std::polar(1.0, -phi), 0.0;
  return u;
}

CMatrix assemble(const LUParams& p) {
  CMatrix u = CMatrix::Identity(1, 1);
  for (int j = 0; j < p.n_qubits; ++j) u = kron(u, su2(p.thetas(j), p.phis(j)));
  return u;
}

void apply_local_left(CMatrix& m, const std::vector<Mat2>& factors) {
  const int n = static_cast<int>(factors.size());
  const Eigen::Index dim = m.rows();
  if (dim != dim_of(n)) throw std::invalid_argument("apply_local_left: dimension mismatch");
  for (int q = 0; q < n; ++q) {
    const Eigen::Index stride = Eigen::Index{1} << (n - 1 - q);
    const Mat2& u = factors[q];
    for (Eigen::Index i0 = 0; i0 < dim; ++i0) {
      if (i0 & stride) continue;
      const Eigen::Index i1 = i0 | stride;
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        const Complex x0 = m(i0, c);
        const Complex x1 = m(i1, c);
        m(i0, c) = u(0, 0) * x0 + u(0, 1) * x1;
        m(i1, c) = u(1, 0) * x0 + u(1, 1) * x1;
      }
    }
  }
}

void apply_local_conjugation(CMatrix& m, const std::vector<Mat2>& factors) {
  const int n = static_cast<int>(factors.size());
  const Eigen::Index dim = m.rows();
  if (dim != dim_of(n) || m.cols() != dim) throw std::invalid_argument("apply_local_conjugation: dimension mismatch");
  apply_local_left(m, factors);
  for (int q = 0; q < n; ++q) {
    const Eigen::Index stride = Eigen::Index{1} << (n - 1 - q);
    const Mat2 ud = factors[q].adjoint();
    for (Eigen::Index r = 0; r < dim; ++r) {
      for (Eigen::Index c0 = 0; c0 < dim; ++c0) {
        if (c0 & stride) continue;
        const Eigen::Index c1 = c0 | stride;
        const Complex x0 = m(r, c0);
        const Complex x1 = m(r, c1);
        // (m U^dagger)(r, c) = sum_k m(r, k) U^dagger(k, c)
        m(r, c0) = x0 * ud(0, 0) + x1 * ud(1, 0);
        m(r, c1) = x0 * ud(0, 1) + x1 * ud(1, 1);
      }
    }
  }
}

DensityMatrix conjugate(const DensityMatrix& rho, const LUParams& p) {
  if (p.n_qubits != rho.n_qubits() || p.thetas.size() != p.n_qubits || p.phis.size() != p.n_qubits)
    throw std::invalid_argument("conjugate: parameter count does not match qubit count");
  CMatrix m = rho.mat();
  apply_local_conjugation(m, factors_of(p.n_qubits, p.flat()));
  m = (m + m.adjoint()) * 0.5;
  return {rho.n_qubits(), std::move(m), DensityMatrix::Unchecked{}};
}

PenaltyObjective::PenaltyObjective(const DensityMatrix& rho) : n_(rho.n_qubits()), rho_(rho.mat()) {}

CMatrix PenaltyObjective::transformed(const RVector& x) const {
  check_flat(n_, x);
  CMatrix m = rho_;
  apply_local_conjugation(m, factors_of(n_, x));
  return m;
}

double PenaltyObjective::value(const RVector& x) const { return penalty_f(transformed(x)); }

double PenaltyObjective::value_and_gradient(const RVector& x, RVector& grad) const {
  const CMatrix rt = transformed(x);
  const Eigen::Index dim = rt.rows();

  // R: rt restricted to the off-X pattern (both triangles).
  CMatrix masked = rt;
  for (Eigen::Index i = 0; i < dim; ++i) {
    masked(i, i) = 0.0;
    masked(i, dim - 1 - i) = 0.0;
  }
  const double f = 0.5 * masked.squaredNorm();

  // dg = 2 Re tr((m (x) 1) F) with F = rt R and m = (du) u^dagger on the
  // differentiated qubit. Only F[k,k] and F[k, k ^ stride] are needed;
  // F[k, i] = sum_c rt(k, c) conj(R(i, c)) since R is Hermitian.
  CVector fdiag(dim);
  for (Eigen::Index k = 0; k < dim; ++k) fdiag(k) = masked.row(k).dot(rt.row(k));

  grad.resize(2 * n_);
  for (int q = 0; q < n_; ++q) {
    const Eigen::Index stride = Eigen::Index{1} << (n_ - 1 - q);
    Complex s00 = 0.0, s11 = 0.0, s10 = 0.0, s01 = 0.0;
    for (Eigen::Index k = 0; k < dim; ++k) {
      const Complex off = masked.row(k ^ stride).dot(rt.row(k));
      if (k & stride) {
        s11 += fdiag(k);
        s01 += off;
      } else {
        s00 += fdiag(k);
        s10 += off;
      }
    }
    const double theta = x(q);
    const double phi = x(n_ + q);
    const Mat2 ud = su2(theta, phi).adjoint();
    for (int which = 0; which < 2; ++which) {
      const Mat2 m = (which == 0 ? su2_dtheta(theta, phi) : su2_dphi(theta, phi)) * ud;
      const Complex t = m(0, 0) * s00 + m(1, 1) * s11 + m(1, 0) * s10 + m(0, 1) * s01;
      grad(which == 0 ? q : n_ + q) = 2.0 * t.real();
    }
  }
  return f;
}

RVector grad_penalty(const DensityMatrix& rho, const LUParams& p) {
  RVector g;
  PenaltyObjective(rho).value_and_gradient(p.flat(), g);
  return g;
}

RVector grad_penalty_fd(const DensityMatrix& rho, const LUParams& p, double h) {
  const PenaltyObjective obj(rho);
  const RVector x = p.flat();
  RVector g(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    RVector xp = x, xm = x;
    xp(i) += h;
    xm(i) -= h;
    g(i) = (obj.value(xp) - obj.value(xm)) / (2.0 * h);
  }
  return g;
}

} // namespace gmx
