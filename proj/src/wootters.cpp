#include "gmx/wootters.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gmx/xform.hpp"

namespace gmx {

SpinFlipSpectrum spin_flip_spectrum(const DensityMatrix& rho) {
  if (rho.n_qubits() != 2) throw std::invalid_argument("spin_flip_spectrum: two-qubit state required");
  CMatrix sy(2, 2);
  sy << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  const CMatrix yy = kron(sy, sy);
  const CMatrix flipped = yy * rho.mat().conjugate() * yy;
  const CMatrix root = psd_sqrt(rho.mat());
  CMatrix sandwich = root * flipped * root;
  sandwich = (sandwich + sandwich.adjoint()) * 0.5;
  const auto eig = herm_eig(sandwich);

  SpinFlipSpectrum out{};
  for (int k = 0; k < 4; ++k) {
    const double ev = eig.eigenvalues(3 - k);
    if (ev < -1e-10) throw std::runtime_error("spin_flip_spectrum: eigenvalue below -1e-10");
    out.eigenvalues[k] = ev;
    out.lambdas[k] = std::sqrt(std::max(0.0, ev));
  }
  return out;
}

double wootters_concurrence(const DensityMatrix& rho) {
  if (rho.n_qubits() != 2) throw std::invalid_argument("wootters_concurrence: two-qubit state required");
  const auto l = spin_flip_spectrum(rho).lambdas;
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

double dicke2_closed_form(double gamma) {
  const double g2 = gamma * gamma;
  const double d2 = 4.0 * (1.0 + g2 + g2 * g2);
  return std::max(0.0, 2.0 * (g2 - 1.0) / d2);
}

Dicke2Report verify_dicke2_equality(const std::vector<double>& gammas) {
  Dicke2Report report;
  for (double gamma : gammas) {
    const DensityMatrix rho = dicke_steady_state({2, gamma});
    Dicke2Row row{gamma, wootters_concurrence(rho), gm_lower_bound_x(rho), dicke2_closed_form(gamma)};
    report.max_w_vs_x = std::max(report.max_w_vs_x, std::abs(row.c_w - row.c_x));
    report.max_vs_closed_form = std::max(
        {report.max_vs_closed_form, std::abs(row.c_w - row.closed_form), std::abs(row.c_x - row.closed_form)});
    report.rows.push_back(row);
  }
  return report;
}

} // namespace gmx
