#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gmx/matcore.hpp"

namespace gmx {

/// Hermitian, unit-trace, PSD matrix on N qubits. Qubit 1 is the most
/// significant bit of the computational-basis index.
class DensityMatrix {
 public:
  struct Unchecked {};

  static constexpr double kHermTol = 1e-12;
  static constexpr double kTraceTol = 1e-12;
  static constexpr double kEigTol = 1e-10;

  /// Validates every invariant; throws std::invalid_argument on violation.
  DensityMatrix(int n_qubits, CMatrix mat);
  /// For callers that guarantee the invariants by construction.
  DensityMatrix(int n_qubits, CMatrix mat, Unchecked) : n_qubits_(n_qubits), mat_(std::move(mat)) {}

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return mat_.rows(); }
  const CMatrix& mat() const { return mat_; }
  Complex operator()(Eigen::Index i, Eigen::Index j) const { return mat_(i, j); }

 private:
  int n_qubits_;
  CMatrix mat_;
};

struct DickeParams {
  int n_qubits = 2;
  double gamma = 0.0; // gamma_A / Omega
};

struct DiagSymParams {
  int n_qubits = 2;
  std::vector<double> populations; // p_0 .. p_N
};

inline Eigen::Index dim_of(int n_qubits) { return Eigen::Index{1} << n_qubits; }

/// |D_k^n>: equal superposition of all basis labels of Hamming weight k.
CVector dicke_state(int n, int k);

DensityMatrix diagonal_symmetric(const DiagSymParams& p);

/// Single-parameter population family: p_{floor(N/2)} = (tau-1)^2,
/// p_{floor(N/2)+1} = tau^2, all other p_l = 2 tau (1-tau) / (N-1).
DiagSymParams tau_populations(int n, double tau);

/// Collective raising/lowering operators J_+ = sum_l 1 (x) sigma_+ (x) 1 with
/// sigma_+ = [[0,1],[0,0]], and J_- = J_+^dagger.
std::pair<CMatrix, CMatrix> collective_ops(int n);

/// Zero-temperature steady state of the collectively driven Dicke model,
/// rho ~ sum_{m,n} (i gamma J_-)^m (-i gamma J_+)^n, normalized by its trace.
DensityMatrix dicke_steady_state(const DickeParams& p);

/// GG^dagger / tr(GG^dagger) with G a 2^n x rank matrix of standard complex
/// normal entries drawn from std::mt19937_64 seeded with `seed`.
DensityMatrix random_density_matrix(int n, int rank, std::uint64_t seed);

/// Pure state |psi><psi| (psi normalized internally).
DensityMatrix pure_state(int n, const CVector& psi);

DensityMatrix ghz_state(int n);
DensityMatrix maximally_mixed(int n);

} // namespace gmx
