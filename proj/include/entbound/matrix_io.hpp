#pragma once

#include <string>

#include "entbound/types.hpp"

namespace entbound {

/// A matrix read from disk together with its declared bipartition.
struct MatrixFile {
  int dim_a = 0;
  int dim_b = 0;
  CMatrix mat;
};

/// Parses the JSON matrix format:
///   { "dim_a": 3, "dim_b": 3,
///     "entries": [ [ [re, im], ... per column ], ... per row ] }
/// Malformed entries are reported with their row and column. Throws
/// ParseError; the matrix itself is not validated as a density here.
MatrixFile parse_matrix_json(const std::string& text);

/// Reads and parses a matrix file; throws IoError / ParseError.
MatrixFile read_matrix_file(const std::string& path);

std::string matrix_to_json(const MatrixFile& m);
void write_matrix_file(const std::string& path, const MatrixFile& m);

}  // namespace entbound
