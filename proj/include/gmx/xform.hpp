#pragma once

#include <vector>

#include "gmx/matcore.hpp"
#include "gmx/states.hpp"

namespace gmx {

/// Main- and anti-diagonal content of an N-qubit matrix. Index k (0-based
/// here) pairs row k with row 2^N - 1 - k.
struct XParams {
  int n_qubits = 0;
  std::vector<double> a;   // rho[k, k]
  std::vector<double> b;   // rho[2^N-1-k, 2^N-1-k]
  std::vector<double> r;   // |rho[k, 2^N-1-k]|
  std::vector<double> phi; // arg rho[k, 2^N-1-k] in [0, 2 pi); 0 when r < 1e-14
};

/// Off-X entries are discarded; no renormalization or positivity repair.
XParams x_projection(const CMatrix& rho, int n_qubits);
inline XParams x_projection(const DensityMatrix& rho) { return x_projection(rho.mat(), rho.n_qubits()); }

/// Rebuilds the X matrix described by `x`.
CMatrix x_reconstruct(const XParams& x);

/// 2 max_k [r_k - sum_{j != k} sqrt(a_j b_j)] before clamping, and the
/// smallest maximizing k.
struct XValue {
  double c_x = 0.0;
  int best_k = 0;
};
XValue x_concurrence_raw(const XParams& x);

/// max[0, c_X]. Accepts projections of non-X matrices (r_k > sqrt(a_k b_k)).
double x_concurrence(const XParams& x);

/// Sum of |rho_ij|^2 over the strict upper triangle excluding the anti-diagonal.
template <typename Derived>
double penalty_f(const Eigen::MatrixBase<Derived>& rho) {
  const Eigen::Index dim = rho.rows();
  double f = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = i + 1; j < dim; ++j)
      if (i + j != dim - 1) f += std::norm(rho(i, j));
  return f;
}
inline double penalty_f(const DensityMatrix& rho) { return penalty_f(rho.mat()); }

/// Certified lower bound on the GM-concurrence in the basis rho is written in.
double gm_lower_bound_x(const DensityMatrix& rho);

struct PhiMuBound {
  double value = 0.0; // max[0, 2 max_mu I_mu]
  int best_mu = 0;    // smallest maximizer
};

/// I_mu = |<mu|rho|2^N-1-mu>| - sum_{nu != mu} sqrt(<nu|rho|nu><2^N-1-nu|rho|2^N-1-nu>),
/// evaluated directly on matrix elements, mu in [0, 2^{N-1}).
double phi_mu_value(const CMatrix& rho, int mu);
PhiMuBound phi_mu_bound(const DensityMatrix& rho);

} // namespace gmx
