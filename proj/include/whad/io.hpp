#pragma once

#include "whad/core.hpp"

#include <iosfwd>
#include <string>

namespace whad {

// Matrix text format: a header line `R C` followed by R rows of C
// whitespace-separated entries. Rationals are written `p/q`, with `/q`
// omitted when q = 1. Lines starting with '#' are ignored.

ExactMatrix parse_matrix(std::istream& in);
ExactMatrix parse_matrix(const std::string& text);
ExactMatrix read_matrix_file(const std::string& path);

void write_matrix(std::ostream& out, const ExactMatrix& m);
void write_matrix(std::ostream& out, const RationalMatrix& m);
std::string format_matrix(const ExactMatrix& m);

std::string to_text(const Integer& x);
std::string to_text(const Rational& x);

std::string read_file(const std::string& path);

}  // namespace whad
