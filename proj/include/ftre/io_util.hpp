#pragma once

#include <iosfwd>
#include <string>

#include "ftre/gf2.hpp"

namespace ftre {

// Round to six significant digits; keeps emitted numbers stable across runs.
double sig6(double v);
std::string format_sig6(double v);

// "96.1 s", "3.61 min", "2.51 days", ...
std::string humanize_seconds(double seconds);

// Matrix text format: 2n rows of 2n entries in {0,1}, whitespace optional.
SymplecticMat parse_matrix(std::istream& in);
std::string matrix_to_text(const SymplecticMat& m);

} // namespace ftre
