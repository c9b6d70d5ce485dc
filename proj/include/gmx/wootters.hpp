#pragma once

#include <array>
#include <vector>

#include "gmx/states.hpp"

namespace gmx {

struct SpinFlipSpectrum {
  std::array<double, 4> eigenvalues; // of rho (sy (x) sy) rho* (sy (x) sy), descending, unclamped
  std::array<double, 4> lambdas;     // square roots after clamping, descending
};

/// Spectrum via the Hermitian sandwich sqrt(rho) (sy sy) rho* (sy sy) sqrt(rho),
/// which is similar to the (non-Hermitian) spin-flip product.
SpinFlipSpectrum spin_flip_spectrum(const DensityMatrix& rho);

/// max[0, l1 - l2 - l3 - l4]. Throws std::invalid_argument unless N = 2.
double wootters_concurrence(const DensityMatrix& rho);

/// max[0, 2 (gamma^2 - 1) / D_2] with D_2 = 4 (1 + gamma^2 + gamma^4).
double dicke2_closed_form(double gamma);

struct Dicke2Row {
  double gamma = 0.0;
  double c_w = 0.0;
  double c_x = 0.0;
  double closed_form = 0.0;
};

struct Dicke2Report {
  std::vector<Dicke2Row> rows;
  double max_w_vs_x = 0.0;        // max |C_W - C_X|
  double max_vs_closed_form = 0.0; // max over both measures of |C - closed form|

  double max_deviation() const { return std::max(max_w_vs_x, max_vs_closed_form); }
};

/// Compares C_W and C_X on the two-qubit Dicke steady state against each
/// other and against the closed form.
Dicke2Report verify_dicke2_equality(const std::vector<double>& gammas);

} // namespace gmx
