#pragma once

#include "gtrop/valued_scalar.hpp"

#include <string>

namespace gtrop {

// Parses a scalar expression over Q(t^{1/d}).
//
// Grammar:
//   expr   := ["-"] term { ("+"|"-") term }
//   term   := factor { ("*"|"/") factor }
//   factor := base [ "^" exponent ]
//   base   := rat | "t" | "(" expr ")"
//   exponent := rat | "(" rat ")"
//   rat    := ["-"] int [ "/" int ]
//
// Whitespace is ignored between tokens. Exponents must lie in (1/d)Z;
// fractional exponents are only legal on pure powers of t. Note that the rat
// token is greedy: "t^1/2" is t^(1/2), not (t^1)/2.
//
// Throws ParseError (with position) on syntax errors and MathError on
// division by the zero scalar or unrepresentable exponents.
ValuedScalar parse_scalar(const std::string& text, long long d);

} // namespace gtrop
