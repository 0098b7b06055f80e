#include "gtrop/rational.hpp"

#include "gtrop/errors.hpp"

#include <limits>

namespace gtrop {

std::string int_str(const Int& n) { return n.str(); }

std::string rat_str(const Rat& q) {
    if (rat_den(q) == 1) return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

Int parse_int(const std::string& text) {
    if (text.empty()) throw ParseError("empty integer literal");
    std::size_t i = 0;
    if (text[0] == '-') i = 1;
    if (i == text.size()) throw ParseError("missing digits in integer literal");
    for (std::size_t j = i; j < text.size(); ++j)
        if (text[j] < '0' || text[j] > '9')
            throw ParseError("invalid character in integer literal", j);
    return Int(text);
}

Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den <= 0) throw ParseError("denominator must be a positive integer", slash + 1);
    return Rat(num, den);
}

long long to_ll(const Int& n) {
    if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min())
        throw MathError("integer too large for machine word: " + n.str());
    return n.convert_to<long long>();
}

Int ivec_gcd(const ZVec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return g;
}

} // namespace gtrop
