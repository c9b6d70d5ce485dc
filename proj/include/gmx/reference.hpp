#pragma once

#include <vector>

#include "gmx/matcore.hpp"

/// Hand-transcribed closed forms of the benchmark-family states for N = 2, 3, 4,
/// independent of the constructions in states.cpp. Used as golden data.
namespace gmx::reference {

/// Diagonal symmetric state with Dicke populations p_0 .. p_N. The published
/// N = 4 table writes the two-excitation block as p_2 / 4 instead of p_2 / 6
/// (its trace is then p_0 + p_1 + 1.5 p_2 + p_3 + p_4); `as_printed` returns
/// that table verbatim, otherwise the block is normalized.
CMatrix diagonal_symmetric(int n, const std::vector<double>& populations, bool as_printed = false);

/// Driven Dicke steady state, entries divided by dicke_normalization(n, gamma).
CMatrix dicke_steady_state(int n, double gamma);

/// D_2 = 4(1 + g^2 + g^4), D_3 = 4(2 + 3g^2 + 6g^4 + 9g^6),
/// D_4 = 16(1 + 2g^2 + 6g^4 + 18g^6 + 36g^8).
double dicke_normalization(int n, double gamma);

} // namespace gmx::reference
