#pragma once

// Dense complex linear algebra for 2^N x 2^N matrices (N <= 8).
//
// Everything here is a free function templated on the Eigen expression type,
// so callers can pass blocks, maps or temporaries without materializing them.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace gmx {

template <typename Real>
using CMatrixT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename Real>
using CVectorT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using RVectorT = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using CMatrix = CMatrixT<double>;
using CVector = CVectorT<double>;
using RVector = RVectorT<double>;
using Complex = std::complex<double>;

/// Tolerances shared by every module.
struct Tolerances {
  static constexpr double herm = 1e-10;   // max |a - a^dagger| entry accepted as Hermitian
  static constexpr double psd = 1e-8;     // most negative eigenvalue accepted as PSD
  static constexpr double psd_clamp = 1e-10;
  static constexpr double jacobi = 1e-14; // off-diagonal Frobenius norm relative to ||A||
  static constexpr int jacobi_max_sweeps = 100;
};

template <typename Real>
struct HermEig {
  RVectorT<Real> eigenvalues;  // ascending
  CMatrixT<Real> eigenvectors; // columns, orthonormal
};

template <typename DerivedA, typename DerivedB>
bool approx_equal(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
                  typename DerivedA::RealScalar abs_tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  if (a.size() == 0) return true;
  return (a - b).cwiseAbs().maxCoeff() <= abs_tol;
}

template <typename Derived>
typename Derived::RealScalar hermiticity_defect(const Eigen::MatrixBase<Derived>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("hermiticity_defect: matrix is not square");
  if (a.size() == 0) return 0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& a,
                  typename Derived::RealScalar tol = Tolerances::herm) {
  return a.rows() == a.cols() && hermiticity_defect(a) <= tol;
}

/// Kronecker product; the result has a.rows()*b.rows() rows.
template <typename DerivedA, typename DerivedB>
CMatrixT<typename DerivedA::RealScalar> kron(const Eigen::MatrixBase<DerivedA>& a,
                                            const Eigen::MatrixBase<DerivedB>& b) {
  using Real = typename DerivedA::RealScalar;
  const Eigen::Index br = b.rows();
  const Eigen::Index bc = b.cols();
  CMatrixT<Real> out(a.rows() * br, a.cols() * bc);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * br, j * bc, br, bc) = std::complex<Real>(a(i, j)) * b.template cast<std::complex<Real>>();
  return out;
}

template <typename Real = double>
CMatrixT<Real> identity(Eigen::Index dim) {
  return CMatrixT<Real>::Identity(dim, dim);
}

/// Full eigendecomposition of a Hermitian matrix by cyclic complex Jacobi sweeps.
///
/// Each rotation first removes the phase of a(p,q) with a diagonal unitary and
/// then applies the real symmetric Jacobi rotation, so the composite 2x2
/// transform is unitary and annihilates the (p,q) pair exactly.
template <typename Derived>
HermEig<typename Derived::RealScalar> herm_eig(const Eigen::MatrixBase<Derived>& input) {
  using Real = typename Derived::RealScalar;
  using C = std::complex<Real>;
  if (!is_hermitian(input, Real(Tolerances::herm)))
    throw std::invalid_argument("herm_eig: input is not Hermitian");

  const Eigen::Index n = input.rows();
  CMatrixT<Real> a = (input + input.adjoint()) / Real(2);
  CMatrixT<Real> v = CMatrixT<Real>::Identity(n, n);

  const Real scale = a.norm();
  auto off_norm = [&] {
    Real s = 0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };

  // Never ask for more than a few ulps of Real, so float instantiations converge.
  const Real rel_tol = std::max(Real(Tolerances::jacobi), Real(8) * std::numeric_limits<Real>::epsilon());
  int sweep = 0;
  while (scale > 0 && off_norm() > rel_tol * scale) {
    if (++sweep > Tolerances::jacobi_max_sweeps)
      throw std::runtime_error("herm_eig: Jacobi sweeps did not converge");
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Real mag = std::abs(a(p, q));
        if (mag == Real(0)) continue;
        const C phase = a(p, q) / mag;
        const Real app = a(p, p).real();
        const Real aqq = a(q, q).real();
        const Real tau = (aqq - app) / (Real(2) * mag);
        const Real t = (tau >= 0 ? Real(1) : Real(-1)) / (std::abs(tau) + std::sqrt(Real(1) + tau * tau));
        const Real c = Real(1) / std::sqrt(Real(1) + t * t);
        const Real s = t * c;
        // R = diag(1, conj(phase)) * [[c, s], [-s, c]]
        const C r_pp = c;
        const C r_pq = s;
        const C r_qp = -s * std::conj(phase);
        const C r_qq = c * std::conj(phase);

        for (Eigen::Index k = 0; k < n; ++k) {
          const C akp = a(k, p);
          const C akq = a(k, q);
          a(k, p) = akp * r_pp + akq * r_qp;
          a(k, q) = akp * r_pq + akq * r_qq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const C apk = a(p, k);
          const C aqk = a(q, k);
          a(p, k) = std::conj(r_pp) * apk + std::conj(r_qp) * aqk;
          a(q, k) = std::conj(r_pq) * apk + std::conj(r_qq) * aqk;
        }
        a(p, q) = a(q, p) = C(0);
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (Eigen::Index k = 0; k < n; ++k) {
          const C vkp = v(k, p);
          const C vkq = v(k, q);
          v(k, p) = vkp * r_pp + vkq * r_qp;
          v(k, q) = vkp * r_pq + vkq * r_qq;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i).real() < a(j, j).real(); });

  HermEig<Real> out{RVectorT<Real>(n), CMatrixT<Real>(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    out.eigenvalues(k) = a(order[k], order[k]).real();
    out.eigenvectors.col(k) = v.col(order[k]);
  }
  return out;
}

/// Hermitian PSD square root. Eigenvalues in [-psd, 0) are clamped to zero.
template <typename Derived>
CMatrixT<typename Derived::RealScalar> psd_sqrt(const Eigen::MatrixBase<Derived>& a) {
  using Real = typename Derived::RealScalar;
  const auto eig = herm_eig(a);
  if (eig.eigenvalues.size() > 0 && eig.eigenvalues(0) < -Real(Tolerances::psd))
    throw std::invalid_argument("psd_sqrt: matrix has a negative eigenvalue");
  const RVectorT<Real> roots = eig.eigenvalues.cwiseMax(Real(0)).cwiseSqrt();
  return eig.eigenvectors * roots.template cast<std::complex<Real>>().asDiagonal() *
         eig.eigenvectors.adjoint();
}

} // namespace gmx
