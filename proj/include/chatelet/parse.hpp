#pragma once

#include <string>

#include "chatelet/poly.hpp"
#include "chatelet/rational.hpp"

namespace chatelet {

// Parses polynomial expressions in the variable x built from rational
// literals ("3", "5/2"), '+', '-', '*', '^' with nonnegative integer
// exponents, unary +/- and parentheses.  Multiplication is always explicit.
// Throws ParseError (with offset) on malformed input.
Poly parse_poly(const std::string& text);

// Parses a single rational literal with optional sign, e.g. "-7" or "3/2".
Rational parse_rational(const std::string& text);

}  // namespace chatelet
