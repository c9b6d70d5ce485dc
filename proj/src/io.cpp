#include "gmx/io.hpp"

#include <istream>
#include <iterator>
#include <stdexcept>

#include <json.hpp>

namespace gmx {

using nlohmann::json;

std::string density_matrix_to_json(const DensityMatrix& rho) {
  const Eigen::Index dim = rho.dim();
  json re = json::array();
  json im = json::array();
  for (Eigen::Index i = 0; i < dim; ++i) {
    json re_row = json::array();
    json im_row = json::array();
    for (Eigen::Index j = 0; j < dim; ++j) {
      re_row.push_back(rho(i, j).real());
      im_row.push_back(rho(i, j).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return json{{"n_qubits", rho.n_qubits()}, {"re", std::move(re)}, {"im", std::move(im)}}.dump();
}

DensityMatrix density_matrix_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("density matrix JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n_qubits") || !doc.contains("re") || !doc.contains("im"))
    throw std::invalid_argument("density matrix JSON: expected keys n_qubits, re, im");
  const int n = doc.at("n_qubits").get<int>();
  if (n < 1 || n > 8) throw std::invalid_argument("density matrix JSON: n_qubits must be in [1, 8]");
  const Eigen::Index dim = dim_of(n);
  const json& re = doc.at("re");
  const json& im = doc.at("im");
  auto check_rows = [&](const json& m, const char* name) {
    if (!m.is_array() || static_cast<Eigen::Index>(m.size()) != dim)
      throw std::invalid_argument(std::string("density matrix JSON: '") + name + "' must have 2^N rows");
    for (const json& row : m)
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim)
        throw std::invalid_argument(std::string("density matrix JSON: '") + name + "' rows must have 2^N entries");
  };
  check_rows(re, "re");
  check_rows(im, "im");
  CMatrix mat(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      mat(i, j) = Complex(re[i][j].get<double>(), im[i][j].get<double>());
  return DensityMatrix(n, std::move(mat));
}

DensityMatrix read_density_matrix(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return density_matrix_from_json(text);
}

} // namespace gmx
