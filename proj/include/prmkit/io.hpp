#pragma once

#include <string>
#include <string_view>

#include "prmkit/linalg.hpp"

namespace prmkit {

enum class MatrixFormat { Txt, Csv, Json };

MatrixFormat matrix_format_from_string(std::string_view s);

/**
 * Matrix serialization. Txt: a "p e rows cols" header line, then one line per
 * row of space-separated element codes. Csv: the same with commas. Json: an
 * object with schema "prmkit/1", p, e, rows, cols and a data array of rows.
 * Element codes are the polynomial-basis integers of Field::build(p, e).
 */
std::string write_matrix(const Matrix& m, MatrixFormat fmt);
/// Throws std::invalid_argument on malformed input or out-of-range entries.
Matrix read_matrix(std::string_view text, MatrixFormat fmt);
/// Picks the format from the first non-space character.
Matrix read_matrix(std::string_view text);

}  // namespace prmkit
