#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "adjdyn/sparse_matrix.hpp"

namespace adjdyn {

/// Writes `%%MatrixMarket matrix coordinate real general` with 1-based
/// entries sorted by (row, col). Output is byte-stable for a given matrix.
void write_matrix_market(std::ostream& os, const SparseMatrix& m);
void write_matrix_market(const std::filesystem::path& path, const SparseMatrix& m);
std::string to_matrix_market(const SparseMatrix& m);

/// Reads coordinate real/integer general files; entries may come in any order.
/// Throws ParseError on malformed input, plus the from_triplets errors.
SparseMatrix read_matrix_market(std::istream& is);
SparseMatrix read_matrix_market(const std::filesystem::path& path);

}  // namespace adjdyn
