#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ddinv/dense_matrix.hpp"

namespace ddinv {

// Text format
// -----------
// Lines whose first non-blank character is '#' are comments; blank lines are
// skipped. The first remaining line holds the order n, followed by n lines
// of n whitespace-separated decimal literals. Anything after the last row
// other than comments is rejected.
//
// Vectors use the same header, followed by n values in any line layout.

DenseMatrix parse_matrix(std::istream& in);
DenseMatrix parse_matrix(std::string_view text);

std::vector<double> parse_vector(std::istream& in);
std::vector<double> parse_vector(std::string_view text);

/// Writes 17 significant digits, which round-trips every double.
std::string format_matrix(const DenseMatrix& a);
std::string format_vector(std::span<const double> x);

/// Locale-independent %g-style rendering with `digits` significant digits.
std::string format_double(double v, int digits = 17);

/// Shortest decimal that reads back to the same double.
std::string format_shortest(double v);

}  // namespace ddinv
