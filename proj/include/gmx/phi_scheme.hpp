#pragma once

#include <vector>

#include "gmx/lugroup.hpp"
#include "gmx/optim.hpp"
#include "gmx/states.hpp"

namespace gmx {

/// {A|B} split of qubit labels 1..N. Canonical form: qubit 1 is in a_side.
struct Bipartition {
  std::vector<int> a_side;
  std::vector<int> b_side;
  unsigned a_mask = 0; // bit (N - label) set for every label in a_side
};

/// The 2^{n-1} - 1 canonical bipartitions, ordered by the subset of
/// {2..n} joined to qubit 1 read as a binary counter (qubit 2 lowest).
std::vector<Bipartition> enumerate_bipartitions(int n);

/// Angles of the 2N single-qubit unitaries V_n, W_n acting on |0...0> (x) |0...0>.
/// Flat layout: [theta_1, phi_1, ..., theta_N, phi_N] for V, then the same for W.
struct PhiParams {
  int n_qubits = 0;
  RVector v_angles; // 2N
  RVector w_angles; // 2N

  static PhiParams from_flat(int n, const RVector& x);
  RVector flat() const;
};

/// Parameters realizing |Phi_mu> = |mu> (x) |2^N - 1 - mu> up to phases.
PhiParams phi_mu_params(int n, int mu);

/// Parameters realizing (U^dagger (x) U^dagger)|Phi_mu> for a local unitary U,
/// so that i_phi(rho, .) equals I_mu evaluated on U rho U^dagger.
PhiParams phi_mu_params_in_frame(const LUParams& frame, int mu);

/// Single-copy objective |<0|Ubar_0^dagger rho U_0|0>| - sum_i sqrt(<0|U_i^dagger rho U_i|0> <0|Ubar_i^dagger rho Ubar_i|0>).
class PhiObjective {
 public:
  explicit PhiObjective(const DensityMatrix& rho);

  int n_qubits() const { return n_; }
  int dimension() const { return 4 * n_; }
  double value(const RVector& flat) const;

 private:
  int n_;
  CMatrix rho_;
  std::vector<Bipartition> parts_;
};

double i_phi(const DensityMatrix& rho, const PhiParams& p);

struct PhiEstimate {
  double estimate = 0.0;     // max[0, 2 max I]
  double best_objective = 0.0;
  PhiParams params;
  OptimResult optim;
};

/// Maximizes i_phi over the 4N angles with multi_start. The start set always
/// holds the |Phi_mu> points of every frame in `frames` (identity when empty),
/// followed by cfg.restarts uniform random points.
PhiEstimate c_phi_estimate(const DensityMatrix& rho, const OptimConfig& cfg, const std::vector<LUParams>& frames = {});

/// Uniform sampler over theta in [0, pi), phi in [0, 2 pi) in the flat PhiParams layout.
Sampler phi_angle_sampler(int n);

} // namespace gmx
