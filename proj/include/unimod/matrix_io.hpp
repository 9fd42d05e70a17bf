#pragma once

#include "unimod/types.hpp"

#include <iosfwd>
#include <string>

namespace unimod {

/// Plain-text matrix format: a header line with the order N followed by N
/// rows of N whitespace-separated entries written as `re+imj` (for example
/// `0.5-0.25j`, `1`, `2j`).
CMat read_matrix(std::istream& in);
CMat read_matrix_file(const std::string& path);

void write_matrix(std::ostream& out, const CMat& m);
void write_matrix_file(const std::string& path, const CMat& m);

/// Parses a single `re+imj` token.
Complex parse_complex(const std::string& token);
std::string format_complex(const Complex& z);

} // namespace unimod
