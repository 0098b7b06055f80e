#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace gtrop {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using ZVec = std::vector<Int>;
using QVec = std::vector<Rat>;

inline Int rat_num(const Rat& q) { return numerator(q); }
inline Int rat_den(const Rat& q) { return denominator(q); }

std::string int_str(const Int& n);

// Canonical form "p" or "p/q" with q > 1 and gcd(p, q) = 1.
std::string rat_str(const Rat& q);

// Strict inverse of rat_str: ["-"] digits ["/" digits]. Reduces to canonical
// form, so "4/2" parses to 2. Throws ParseError on anything else.
Rat parse_rat(const std::string& text);
Int parse_int(const std::string& text);

// Checked narrowing; throws MathError when the value does not fit.
long long to_ll(const Int& n);

Int ivec_gcd(const ZVec& v);

} // namespace gtrop
