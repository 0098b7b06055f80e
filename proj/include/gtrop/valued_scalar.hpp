#pragma once

#include "gtrop/extrat.hpp"
#include "gtrop/laurent.hpp"
#include "gtrop/rational.hpp"

#include <string>

namespace gtrop {

// Element of the valued field Q(t^{1/d}): a fraction of finite Laurent
// polynomials in u = t^{1/d}, with the t-adic valuation taking values in
// (1/d)Z and +infinity at 0. Constants carry the trivial valuation.
//
// Canonical form, maintained by every constructor and operation:
//   - zero is numerator 0 over denominator 1;
//   - otherwise the denominator is an ordinary polynomial in u with constant
//     coefficient exactly 1 (its t-power and scale are absorbed into the
//     numerator), and gcd(numerator / u^{min_exp}, denominator) = 1.
// With the denominator pinned this way, valuation = min_exp(numerator) / d.
class ValuedScalar {
public:
    ValuedScalar() : d_(1), den_(LaurentPoly::constant(Rat(1))) {}

    static ValuedScalar zero(long long d = 1);
    static ValuedScalar one(long long d = 1);
    static ValuedScalar from_rational(const Rat& c, long long d = 1);
    // t^q; requires q*d integral.
    static ValuedScalar t_power(const Rat& q, long long d);
    static ValuedScalar from_fraction(LaurentPoly num, LaurentPoly den, long long d);

    long long exponent_denominator() const { return d_; }
    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    ExtRat valuation() const;

    // Same field element viewed with exponent denominator dnew; d must divide dnew.
    ValuedScalar rebased(long long dnew) const;

    friend ValuedScalar operator+(const ValuedScalar& a, const ValuedScalar& b);
    friend ValuedScalar operator-(const ValuedScalar& a, const ValuedScalar& b);
    friend ValuedScalar operator*(const ValuedScalar& a, const ValuedScalar& b);
    friend ValuedScalar operator/(const ValuedScalar& a, const ValuedScalar& b);
    ValuedScalar operator-() const;
    ValuedScalar inverse() const;

    // Integer exponents always work; fractional exponents only on monomials
    // c*t^q with c = 1, and the resulting exponent must stay in (1/d)Z.
    ValuedScalar pow(const Rat& e) const;

    // Mathematical equality of field elements; rebases to a common denominator.
    bool operator==(const ValuedScalar& o) const;
    bool operator!=(const ValuedScalar& o) const { return !(*this == o); }

    std::string str() const;

private:
    long long d_;
    LaurentPoly num_, den_;
};

} // namespace gtrop
