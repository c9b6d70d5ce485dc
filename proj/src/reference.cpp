#include "gmx/reference.hpp"

#include <stdexcept>
#include <string>

namespace gmx::reference {

namespace {

void check_n(int n) {
  if (n < 2 || n > 4) throw std::invalid_argument("reference: tabulated only for N = 2, 3, 4");
}

// Fills the upper triangle from a lower triangle given row by row.
CMatrix from_lower(const std::vector<std::vector<Complex>>& rows) {
  const auto dim = static_cast<Eigen::Index>(rows.size());
  CMatrix m = CMatrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != i + 1) throw std::logic_error("reference: ragged table");
    for (Eigen::Index j = 0; j <= i; ++j) {
      m(i, j) = rows[i][j];
      m(j, i) = std::conj(rows[i][j]);
    }
  }
  return m;
}

// Lower triangles of N * rho_ds: '.' is zero, digit k is p_k, and capital
// letter 'A' + k is N p_k.
const std::vector<std::string>& ds_pattern(int n) {
  static const std::vector<std::string> ds2{"A", ".1", ".11", "...C"};
  static const std::vector<std::string> ds3{"A", ".1", ".11", "...2", ".11.1", "...2.2", "...2.22", ".......D"};
  static const std::vector<std::string> ds4{
      "A",
      ".1",
      ".11",
      "...2",
      ".11.1",
      "...2.2",
      "...2.22",
      ".......3",
      ".11.1...1",
      "...2.22..2",
      "...2.22..22",
      ".......3...3",
      "...2.22..22.2",
      ".......3...3.3",
      ".......3...3.33",
      "...............E",
  };
  return n == 2 ? ds2 : n == 3 ? ds3 : ds4;
}

double binomial(int n, int k) {
  double c = 1.0;
  for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
  return c;
}

} // namespace

CMatrix diagonal_symmetric(int n, const std::vector<double>& populations, bool as_printed) {
  check_n(n);
  if (static_cast<int>(populations.size()) != n + 1) throw std::invalid_argument("reference: need N + 1 populations");
  std::vector<std::vector<Complex>> rows;
  for (const std::string& pattern : ds_pattern(n)) {
    std::vector<Complex> row;
    for (char c : pattern) {
      if (c == '.') row.emplace_back(0.0);
      else if (c >= '0' && c <= '9') {
        // Coherences inside the Dicke-k block are p_k / C(N, k); the printed
        // table writes p_k / N, which agrees except for the N = 4, k = 2 block.
        const int k = c - '0';
        const double scale = as_printed ? 1.0 : n / binomial(n, k);
        row.emplace_back(scale * populations[k]);
      }
      else row.emplace_back(n * populations[c - 'A']);
    }
    rows.push_back(std::move(row));
  }
  return from_lower(rows) / static_cast<double>(n);
}

double dicke_normalization(int n, double gamma) {
  check_n(n);
  const double g2 = gamma * gamma;
  const double g4 = g2 * g2;
  const double g6 = g4 * g2;
  if (n == 2) return 4.0 * (1.0 + g2 + g4);
  if (n == 3) return 4.0 * (2.0 + 3.0 * g2 + 6.0 * g4 + 9.0 * g6);
  return 16.0 * (1.0 + 2.0 * g2 + 6.0 * g4 + 18.0 * g6 + 36.0 * g4 * g4);
}

CMatrix dicke_steady_state(int n, double gamma) {
  check_n(n);
  const Complex i(0.0, 1.0);
  const double g = gamma;
  const double g2 = g * g;
  const double g3 = g2 * g;
  const double g4 = g2 * g2;
  const double g6 = g4 * g2;
  const auto G = [&](int k) { return 1.0 + k * g2; };

  // Names for the recurring entries of the tables.
  const Complex A = i * g;                       // gamma i
  const Complex B = -2.0 * g2;                   // -2 gamma^2
  const Complex C = -6.0 * i * g3;               // -6 gamma^3 i
  const Complex iG2 = i * g * G(2);              // gamma i Gamma_2
  const Complex p2i3 = 2.0 * i * g3;             // 2 gamma^3 i
  const Complex m2i3 = -2.0 * i * g3;            // -2 gamma^3 i
  const Complex g2G4 = g2 * G(4);                // gamma^2 Gamma_4
  const Complex m2G3 = -2.0 * g2 * G(3);         // -2 gamma^2 Gamma_3
  const Complex iE = i * g * (12.0 * g4 + G(4)); // gamma i (12 gamma^4 + Gamma_4)
  const Complex d1 = G(1);
  const Complex d2 = 4.0 * g4 + G(2);
  const Complex d3 = (1.0 + 12.0 * g4) * G(3);

  if (n == 2) {
    const std::vector<std::vector<Complex>> rows{
        {1.0},
        {A, d1},
        {A, g2, d1},
        {B, iG2, iG2, 1.0 + 2.0 * g2 + 4.0 * g4},
    };
    return from_lower(rows) / dicke_normalization(2, gamma);
  }

  std::vector<std::vector<Complex>> rows{
      {1.0},
      {A, d1},
      {A, g2, d1},
      {B, iG2, iG2, d2},
      {A, g2, g2, m2i3, d1},
      {B, iG2, p2i3, g2G4, iG2, d2},
      {B, p2i3, iG2, g2G4, iG2, g2G4, d2},
      {C, m2G3, m2G3, iE, m2G3, iE, iE, d3},
  };
  if (n == 3) return from_lower(rows) / dicke_normalization(3, gamma);

  const Complex m6g4 = -6.0 * g4;
  const Complex p4g4 = 4.0 * g4;
  const Complex m2iG6 = -2.0 * i * g3 * G(6);
  const Complex p2iG6 = 2.0 * i * g3 * G(6);
  const Complex q = g2 * (36.0 * g4 + G(8));
  const Complex m6iG4 = -6.0 * i * g3 * G(4);
  const Complex m2X = -2.0 * g2 * (24.0 * g4 + G(6));
  const Complex iF = i * g * (G(6) + 36.0 * g4 * G(4));
  const Complex last = 24.0 * g4 + (1.0 + 144.0 * g6) * G(4);

  const std::vector<std::vector<Complex>> lower{
      {A, g2, g2, m2i3, g2, m2i3, m2i3, m6g4, d1},
      {B, iG2, p2i3, g2G4, p2i3, g2G4, p4g4, m2iG6, iG2, d2},
      {B, p2i3, iG2, g2G4, p2i3, p4g4, g2G4, m2iG6, iG2, g2G4, d2},
      {C, m2G3, m2G3, iE, m6g4, p2iG6, p2iG6, q, m2G3, iE, iE, d3},
      {B, p2i3, p2i3, p4g4, iG2, g2G4, g2G4, m2iG6, iG2, g2G4, g2G4, m2iG6, d2},
      {C, m2G3, m6g4, p2iG6, m2G3, iE, p2iG6, q, m2G3, iE, p2iG6, q, iE, d3},
      {C, m6g4, m2G3, p2iG6, m2G3, p2iG6, iE, q, m2G3, p2iG6, iE, q, iE, q, d3},
      {24.0 * g4, m6iG4, m6iG4, m2X, m6iG4, m2X, m2X, iF, m6iG4, m2X, m2X, iF, m2X, iF, iF, last},
  };
  rows.insert(rows.end(), lower.begin(), lower.end());
  return from_lower(rows) / dicke_normalization(4, gamma);
}

} // namespace gmx::reference
