#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "wmkit/matrix.hpp"

namespace wmkit {

// Matrix text format (bit-exact):
//   - optional comment lines starting with '#' before the matrix,
//   - then n lines of exactly n characters from {'+', '-', '0'}
//     ('+' = +1, '-' = -1, '0' = 0), each terminated by a single '\n'.
// The parser rejects ragged rows, characters outside the alphabet (including
// '\r'), comments after the first data line, non-square data, and empty
// input. A missing final '\n' is tolerated on input; the writer always emits
// it.
std::string to_matrix_text(const TernaryMatrix& a);
TernaryMatrix parse_matrix_text(std::string_view text);  // throws FormatError

// Rowspec token: one string over the same alphabet, e.g. "0++-" for
// (0, +1, +1, -1).
std::string to_rowspec_string(const RowSpec& r);
RowSpec parse_rowspec_string(std::string_view token);  // throws FormatError

char entry_symbol(std::int8_t value);

}  // namespace wmkit
