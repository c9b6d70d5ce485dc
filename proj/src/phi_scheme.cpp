#include "gmx/phi_scheme.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gmx {

namespace {

// Snaps cos/sin at multiples of pi/2 so basis-state parameters produce exact
// zeros; otherwise sqrt(<s|rho|s><sbar|rho|sbar>) picks up ~1e-9 from a 1e-17
// amplitude.
Eigen::Vector2cd ket_from_angles(double theta, double phi) {
  double c = std::cos(theta);
  double s = std::sin(theta);
  if (std::abs(c) < 1e-15) {
    c = 0.0;
    s = s > 0 ? 1.0 : -1.0;
  } else if (std::abs(s) < 1e-15) {
    s = 0.0;
    c = c > 0 ? 1.0 : -1.0;
  }
  return {Complex(c), -s * std::polar(1.0, -phi)};
}

// Amplitudes of (x)_l k_l where k_l = w_l if qubit l is in `mask` else v_l.
CVector product_ket(const std::vector<Eigen::Vector2cd>& v, const std::vector<Eigen::Vector2cd>& w, unsigned mask) {
  const int n = static_cast<int>(v.size());
  CVector out(dim_of(n));
  for (Eigen::Index idx = 0; idx < out.size(); ++idx) {
    Complex amp = 1.0;
    for (int q = 0; q < n; ++q) {
      const int pos = n - 1 - q;
      const auto& k = (mask >> pos) & 1u ? w[q] : v[q];
      amp *= k((idx >> pos) & 1);
    }
    out(idx) = amp;
  }
  return out;
}

} // namespace

std::vector<Bipartition> enumerate_bipartitions(int n) {
  if (n < 2) throw std::invalid_argument("enumerate_bipartitions: need at least 2 qubits");
  if (n > 16) throw std::invalid_argument("enumerate_bipartitions: too many qubits");
  std::vector<Bipartition> out;
  const unsigned count = (1u << (n - 1)) - 1u;
  for (unsigned sub = 0; sub < count; ++sub) {
    Bipartition bp;
    bp.a_side.push_back(1);
    bp.a_mask = 1u << (n - 1);
    for (int label = 2; label <= n; ++label) {
      if ((sub >> (label - 2)) & 1u) {
        bp.a_side.push_back(label);
        bp.a_mask |= 1u << (n - label);
      } else {
        bp.b_side.push_back(label);
      }
    }
    out.push_back(std::move(bp));
  }
  return out;
}

PhiParams PhiParams::from_flat(int n, const RVector& x) {
  if (x.size() != 4 * n) throw std::invalid_argument("PhiParams: flat vector must have 4N entries");
  return {n, x.head(2 * n), x.tail(2 * n)};
}

RVector PhiParams::flat() const {
  RVector x(4 * n_qubits);
  x << v_angles, w_angles;
  return x;
}

PhiParams phi_mu_params_in_frame(const LUParams& frame, int mu) {
  const int n = frame.n_qubits;
  if (mu < 0 || mu >= (1 << (n - 1))) throw std::invalid_argument("phi_mu_params: mu out of range");
  const int mu_bar = (1 << n) - 1 - mu;
  PhiParams p{n, RVector(2 * n), RVector(2 * n)};
  // su2(t, f)^dagger |0> = col(-t, f) and su2(t, f)^dagger |1> ~ col(t + pi/2, f + pi).
  auto set = [&](RVector& angles, int q, int bit) {
    const double t = frame.thetas(q);
    const double f = frame.phis(q);
    angles(2 * q) = bit ? t + std::numbers::pi / 2 : -t;
    angles(2 * q + 1) = bit ? f + std::numbers::pi : f;
  };
  for (int q = 0; q < n; ++q) {
    const int pos = n - 1 - q;
    set(p.v_angles, q, (mu >> pos) & 1);
    set(p.w_angles, q, (mu_bar >> pos) & 1);
  }
  return p;
}

PhiParams phi_mu_params(int n, int mu) { return phi_mu_params_in_frame(LUParams::identity(n), mu); }

PhiObjective::PhiObjective(const DensityMatrix& rho)
    : n_(rho.n_qubits()), rho_(rho.mat()), parts_(enumerate_bipartitions(rho.n_qubits())) {}

double PhiObjective::value(const RVector& flat) const {
  if (flat.size() != 4 * n_) throw std::invalid_argument("PhiObjective: flat vector must have 4N entries");
  std::vector<Eigen::Vector2cd> v(n_), w(n_);
  for (int q = 0; q < n_; ++q) {
    v[q] = ket_from_angles(flat(2 * q), flat(2 * q + 1));
    w[q] = ket_from_angles(flat(2 * n_ + 2 * q), flat(2 * n_ + 2 * q + 1));
  }
  const unsigned full = (1u << n_) - 1u;
  auto expectation = [&](unsigned mask) {
    const CVector k = product_ket(v, w, mask);
    return std::max(0.0, k.dot(rho_ * k).real());
  };

  const CVector ket_v = product_ket(v, w, 0u);
  const CVector ket_w = product_ket(v, w, full);
  double value = std::abs(ket_w.dot(rho_ * ket_v));
  for (const Bipartition& bp : parts_)
    value -= std::sqrt(expectation(bp.a_mask) * expectation(full & ~bp.a_mask));
  return value;
}

double i_phi(const DensityMatrix& rho, const PhiParams& p) {
  if (p.n_qubits != rho.n_qubits()) throw std::invalid_argument("i_phi: qubit count mismatch");
  return PhiObjective(rho).value(p.flat());
}

Sampler phi_angle_sampler(int n) {
  RVector hi(4 * n);
  for (int k = 0; k < 2 * n; ++k) {
    hi(2 * k) = std::numbers::pi;
    hi(2 * k + 1) = 2.0 * std::numbers::pi;
  }
  return uniform_box_sampler(RVector::Zero(4 * n), hi);
}

PhiEstimate c_phi_estimate(const DensityMatrix& rho, const OptimConfig& cfg, const std::vector<LUParams>& frames) {
  const int n = rho.n_qubits();
  if (n < 2) throw std::invalid_argument("c_phi_estimate: need at least 2 qubits");
  const PhiObjective objective(rho);
  const ValueGradient fg = with_central_differences([&](const RVector& x) { return -objective.value(x); });

  std::vector<RVector> seeds;
  const std::vector<LUParams> used = frames.empty() ? std::vector<LUParams>{LUParams::identity(n)} : frames;
  for (const LUParams& frame : used)
    for (int mu = 0; mu < (1 << (n - 1)); ++mu) seeds.push_back(phi_mu_params_in_frame(frame, mu).flat());

  PhiEstimate out;
  out.optim = multi_start(fg, phi_angle_sampler(n), cfg, seeds);
  out.best_objective = -out.optim.best_value;
  out.estimate = std::max(0.0, 2.0 * out.best_objective);
  out.params = PhiParams::from_flat(n, out.optim.best_point);
  return out;
}

} // namespace gmx
