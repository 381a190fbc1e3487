#pragma once

#include <string>
#include <vector>

#include "pinwheel/exact.hpp"

namespace pinwheel {

// All numeric CSV output carries 15 significant digits.
std::string format_double(double v);

// Exact fraction "p/q" (q always present, reduced by cpp_rational).
std::string format_rational(const BigRat& r);
BigRat parse_rational(const std::string& s);

std::string csv_trim(const std::string& s);
std::vector<std::string> csv_split(const std::string& line, std::size_t expected,
                                   const char* what);

}  // namespace pinwheel
