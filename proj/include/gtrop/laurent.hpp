#pragma once

#include "gtrop/rational.hpp"

#include <map>
#include <string>

namespace gtrop {

// Finite Laurent polynomial in one indeterminate u with rational coefficients,
// stored sparsely. The map never holds a zero coefficient, so the default
// instance is the zero polynomial. Exponents may be negative.
//
// ValuedScalar interprets u as t^{1/d}; this class is d-agnostic except for
// str(d), which renders exponents divided by d.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly constant(const Rat& c);
    static LaurentPoly monomial(const Rat& c, long long e);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }

    // Extremal exponents; calling these on the zero polynomial is a caller bug.
    long long min_exp() const;
    long long max_exp() const;

    Rat coeff(long long e) const;
    void set(long long e, const Rat& c); // assigning zero erases the term
    const std::map<long long, Rat>& terms() const { return terms_; }

    LaurentPoly shifted(long long k) const;   // multiply by u^k
    LaurentPoly stretched(long long f) const; // substitute u -> u^f, f >= 1
    LaurentPoly scaled(const Rat& c) const;

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Human/parser-facing form, exponents as t^(e/d); inverse of the scalar
    // grammar on canonical output.
    std::string str(long long d) const;

private:
    std::map<long long, Rat> terms_;
};

// gcd of two ordinary polynomials (min_exp >= 0 when nonzero), monic result.
// gcd(a, 0) = monic(a); gcd(0, 0) = 0.
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);

// Exact division of ordinary polynomials; remainder must vanish.
LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b);

} // namespace gtrop
