#include "gmx/states.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace gmx {

namespace {

void check_qubits(int n, const char* where) {
  if (n < 1 || n > 8) throw std::invalid_argument(std::string(where) + ": qubit count must be in [1, 8]");
}

} // namespace

DensityMatrix::DensityMatrix(int n_qubits, CMatrix mat) : n_qubits_(n_qubits), mat_(std::move(mat)) {
  check_qubits(n_qubits, "DensityMatrix");
  if (mat_.rows() != dim_of(n_qubits) || mat_.cols() != dim_of(n_qubits))
    throw std::invalid_argument("DensityMatrix: dimension does not match qubit count");
  if (!mat_.allFinite()) throw std::invalid_argument("DensityMatrix: non-finite entry");
  if (hermiticity_defect(mat_) > kHermTol) throw std::invalid_argument("DensityMatrix: not Hermitian");
  if (std::abs(mat_.trace() - Complex(1.0)) > kTraceTol)
    throw std::invalid_argument("DensityMatrix: trace is not 1");
  if (herm_eig(mat_).eigenvalues(0) < -kEigTol)
    throw std::invalid_argument("DensityMatrix: negative eigenvalue");
}

CVector dicke_state(int n, int k) {
  check_qubits(n, "dicke_state");
  if (k < 0 || k > n) throw std::invalid_argument("dicke_state: excitation count out of range");
  const Eigen::Index dim = dim_of(n);
  CVector v = CVector::Zero(dim);
  Eigen::Index count = 0;
  for (Eigen::Index i = 0; i < dim; ++i)
    if (std::popcount(static_cast<unsigned>(i)) == k) {
      v(i) = 1.0;
      ++count;
    }
  return v / std::sqrt(static_cast<double>(count));
}

DensityMatrix diagonal_symmetric(const DiagSymParams& p) {
  const int n = p.n_qubits;
  check_qubits(n, "diagonal_symmetric");
  if (p.populations.size() != static_cast<std::size_t>(n + 1))
    throw std::invalid_argument("diagonal_symmetric: need N+1 populations");
  double total = 0.0;
  for (double pk : p.populations) {
    if (!(pk >= 0.0 && pk <= 1.0)) throw std::invalid_argument("diagonal_symmetric: population outside [0,1]");
    total += pk;
  }
  if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("diagonal_symmetric: populations do not sum to 1");

  CMatrix rho = CMatrix::Zero(dim_of(n), dim_of(n));
  for (int k = 0; k <= n; ++k) {
    if (p.populations[k] == 0.0) continue;
    const CVector d = dicke_state(n, k);
    rho.noalias() += p.populations[k] * d * d.adjoint();
  }
  return {n, std::move(rho), DensityMatrix::Unchecked{}};
}

DiagSymParams tau_populations(int n, double tau) {
  if (n < 2) throw std::invalid_argument("tau_populations: need at least 2 qubits");
  if (!(tau >= 0.0 && tau <= 1.0)) throw std::invalid_argument("tau_populations: tau outside [0,1]");
  DiagSymParams p{n, std::vector<double>(n + 1, 2.0 * tau * (1.0 - tau) / (n - 1))};
  p.populations[n / 2] = (tau - 1.0) * (tau - 1.0);
  p.populations[n / 2 + 1] = tau * tau;
  return p;
}

std::pair<CMatrix, CMatrix> collective_ops(int n) {
  check_qubits(n, "collective_ops");
  CMatrix sigma_plus = CMatrix::Zero(2, 2);
  sigma_plus(0, 1) = 1.0;
  CMatrix jp = CMatrix::Zero(dim_of(n), dim_of(n));
  for (int l = 1; l <= n; ++l)
    jp += kron(kron(identity(dim_of(l - 1)), sigma_plus), identity(dim_of(n - l)));
  CMatrix jm = jp.adjoint();
  return {std::move(jp), std::move(jm)};
}

DensityMatrix dicke_steady_state(const DickeParams& p) {
  check_qubits(p.n_qubits, "dicke_steady_state");
  if (!(p.gamma >= 0.0) || !std::isfinite(p.gamma))
    throw std::invalid_argument("dicke_steady_state: gamma must be finite and non-negative");
  const auto [jp, jm] = collective_ops(p.n_qubits);
  const Eigen::Index dim = dim_of(p.n_qubits);

  // B = sum_n (-i gamma J_+)^n; the m-sum is B^dagger, so rho ~ B^dagger B.
  const CMatrix step = Complex(0.0, -p.gamma) * jp;
  CMatrix power = identity(dim);
  CMatrix b = power;
  for (int k = 1; k <= p.n_qubits; ++k) {
    power = power * step;
    b += power;
  }
  CMatrix rho = b.adjoint() * b;
  rho /= rho.trace().real();
  rho = (rho + rho.adjoint()) * 0.5;
  return {p.n_qubits, std::move(rho), DensityMatrix::Unchecked{}};
}

DensityMatrix random_density_matrix(int n, int rank, std::uint64_t seed) {
  check_qubits(n, "random_density_matrix");
  const Eigen::Index dim = dim_of(n);
  if (rank < 1 || rank > dim) throw std::invalid_argument("random_density_matrix: rank out of range");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix g(dim, rank);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < rank; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = (rho + rho.adjoint()) * 0.5;
  return {n, std::move(rho), DensityMatrix::Unchecked{}};
}

DensityMatrix pure_state(int n, const CVector& psi) {
  check_qubits(n, "pure_state");
  if (psi.size() != dim_of(n)) throw std::invalid_argument("pure_state: vector length does not match qubit count");
  const double norm = psi.norm();
  if (!(norm > 0.0)) throw std::invalid_argument("pure_state: zero vector");
  const CVector u = psi / norm;
  return {n, u * u.adjoint(), DensityMatrix::Unchecked{}};
}

DensityMatrix ghz_state(int n) {
  CVector psi = CVector::Zero(dim_of(n));
  psi(0) = 1.0;
  psi(dim_of(n) - 1) = 1.0;
  return pure_state(n, psi);
}

DensityMatrix maximally_mixed(int n) {
  check_qubits(n, "maximally_mixed");
  return {n, identity(dim_of(n)) / static_cast<double>(dim_of(n)), DensityMatrix::Unchecked{}};
}

} // namespace gmx
