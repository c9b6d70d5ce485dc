#pragma once

#include <iosfwd>
#include <string>

#include "gmx/states.hpp"

namespace gmx {

/// {"n_qubits": N, "re": [[...]], "im": [[...]]}, rows outermost.
std::string density_matrix_to_json(const DensityMatrix& rho);

/// Parses the document above and validates it as a density matrix. Throws
/// std::invalid_argument on malformed input or violated invariants.
DensityMatrix density_matrix_from_json(const std::string& text);
DensityMatrix read_density_matrix(std::istream& in);

} // namespace gmx
