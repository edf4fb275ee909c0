#include "entbound/matrix_io.hpp"

#include <json.hpp>

#include "entbound/csv.hpp"
#include "entbound/errors.hpp"

namespace entbound {

using nlohmann::json;

MatrixFile parse_matrix_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::ParseError, std::string("matrix file: ") + e.what());
  }
  if (!doc.is_object()) fail(Errc::ParseError, "matrix file: top level must be an object");
  for (const char* key : {"dim_a", "dim_b", "entries"})
    if (!doc.contains(key)) fail(Errc::ParseError, std::string("matrix file: missing '") + key + "'");
  if (!doc["dim_a"].is_number_integer() || !doc["dim_b"].is_number_integer())
    fail(Errc::ParseError, "matrix file: dim_a and dim_b must be integers");

  MatrixFile out;
  out.dim_a = doc["dim_a"].get<int>();
  out.dim_b = doc["dim_b"].get<int>();
  if (out.dim_a < 1 || out.dim_b < 1)
    fail(Errc::ParseError, "matrix file: dimensions must be positive");

  const json& rows = doc["entries"];
  if (!rows.is_array()) fail(Errc::ParseError, "matrix file: 'entries' must be a list of rows");
  const int n = static_cast<int>(rows.size());
  out.mat.resize(n, n);
  for (int r = 0; r < n; ++r) {
    const json& row = rows[r];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      fail(Errc::ParseError,
           "matrix file: row " + std::to_string(r) + " must hold " + std::to_string(n) + " entries");
    for (int c = 0; c < n; ++c) {
      const json& cell = row[c];
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number())
        fail(Errc::ParseError, "matrix file: row " + std::to_string(r) + ", column " +
                                   std::to_string(c) + ": expected [re, im]");
      out.mat(r, c) = Complex(cell[0].get<double>(), cell[1].get<double>());
    }
  }
  return out;
}

MatrixFile read_matrix_file(const std::string& path) { return parse_matrix_json(read_file(path)); }

std::string matrix_to_json(const MatrixFile& m) {
  json rows = json::array();
  for (int r = 0; r < m.mat.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.mat.cols(); ++c)
      row.push_back(json::array({m.mat(r, c).real(), m.mat(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  json doc{{"dim_a", m.dim_a}, {"dim_b", m.dim_b}, {"entries", std::move(rows)}};
  return doc.dump(2) + "\n";
}

void write_matrix_file(const std::string& path, const MatrixFile& m) {
  write_file(path, matrix_to_json(m));
}

}  // namespace entbound
