#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "douady/adhm.hpp"

namespace douady {

// Text form of a triple: whitespace-separated tokens n, then A row-major,
// then B row-major, then v. Scalars use GaussianRational::parse syntax
// ("1/2+3/4i"); '#' starts a comment running to end of line.
MatrixTriple parse_triple(std::string_view text);  // throws ParseError
MatrixTriple read_triple_file(const std::string& path);
std::string format_triple(const MatrixTriple& tr);

}  // namespace douady
