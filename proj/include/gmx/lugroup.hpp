#pragma once

#include <vector>

#include <Eigen/Dense>

#include "gmx/matcore.hpp"
#include "gmx/states.hpp"

namespace gmx {

using Mat2 = Eigen::Matrix2cd;

/// Angles of a product of single-qubit unitaries su2(theta_j, phi_j).
/// The flat layout used by the optimizer is [theta_1..theta_N, phi_1..phi_N].
struct LUParams {
  int n_qubits = 0;
  RVector thetas;
  RVector phis;

  static LUParams identity(int n);
  /// theta_j = pi/4, phi_j = 0: the symmetric minimizer for diagonal symmetric states.
  static LUParams symmetric_quarter(int n);
  static LUParams from_flat(int n, const RVector& x);
  RVector flat() const;
  /// theta in [0, pi), phi in [0, 2 pi); reporting only.
  LUParams canonical() const;
};

/// [[cos t, sin t e^{i p}], [-sin t e^{-i p}, cos t]]
Mat2 su2(double theta, double phi);
Mat2 su2_dtheta(double theta, double phi);
Mat2 su2_dphi(double theta, double phi);

/// U = su2_1 (x) su2_2 (x) ... (x) su2_N, qubit 1 leftmost.
CMatrix assemble(const LUParams& p);

/// In place m <- (x)_j u_j  m  ((x)_j u_j)^dagger, one qubit at a time.
void apply_local_conjugation(CMatrix& m, const std::vector<Mat2>& factors);
/// In place m <- (x)_j u_j m (no right factor).
void apply_local_left(CMatrix& m, const std::vector<Mat2>& factors);

/// rho~ = U rho U^dagger.
DensityMatrix conjugate(const DensityMatrix& rho, const LUParams& p);

/// g(p) = penalty_f(U rho U^dagger) with value and analytic gradient in the flat layout.
class PenaltyObjective {
 public:
  explicit PenaltyObjective(const DensityMatrix& rho);

  int n_qubits() const { return n_; }
  int dimension() const { return 2 * n_; }

  double value(const RVector& x) const;
  double value_and_gradient(const RVector& x, RVector& grad) const;
  /// Conjugated matrix at x.
  CMatrix transformed(const RVector& x) const;

 private:
  int n_;
  CMatrix rho_;
};

/// Analytic gradient of g at p (flat layout).
RVector grad_penalty(const DensityMatrix& rho, const LUParams& p);
/// Central finite-difference gradient of g at p with step h.
RVector grad_penalty_fd(const DensityMatrix& rho, const LUParams& p, double h = 1e-6);

} // namespace gmx
