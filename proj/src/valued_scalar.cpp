#include "gtrop/valued_scalar.hpp"

#include "gtrop/errors.hpp"

#include <numeric>
#include <utility>

namespace gtrop {

namespace {
void require_positive_d(long long d) {
    if (d < 1) throw MathError("exponent denominator must be a positive integer");
}
} // namespace

ValuedScalar ValuedScalar::zero(long long d) {
    require_positive_d(d);
    ValuedScalar s;
    s.d_ = d;
    return s;
}

ValuedScalar ValuedScalar::one(long long d) { return from_rational(Rat(1), d); }

ValuedScalar ValuedScalar::from_rational(const Rat& c, long long d) {
    require_positive_d(d);
    ValuedScalar s;
    s.d_ = d;
    s.num_ = LaurentPoly::constant(c);
    return s;
}

ValuedScalar ValuedScalar::t_power(const Rat& q, long long d) {
    require_positive_d(d);
    Rat scaled = q * d;
    if (rat_den(scaled) != 1)
        throw MathError("exponent " + rat_str(q) + " is not a multiple of 1/" +
                        std::to_string(d));
    ValuedScalar s;
    s.d_ = d;
    s.num_ = LaurentPoly::monomial(Rat(1), to_ll(rat_num(scaled)));
    return s;
}

ValuedScalar ValuedScalar::from_fraction(LaurentPoly num, LaurentPoly den, long long d) {
    require_positive_d(d);
    if (den.is_zero()) throw MathError("division by the zero scalar");
    ValuedScalar s;
    s.d_ = d;
    if (num.is_zero()) {
        s.den_ = LaurentPoly::constant(Rat(1));
        return s;
    }
    // Shift the denominator to an ordinary polynomial with nonzero constant
    // term; the shift moves into the numerator.
    long long dk = den.min_exp();
    den = den.shifted(-dk);
    num = num.shifted(-dk);
    // Divide out the polynomial gcd, taken after stripping the numerator's
    // t-power (the gcd of two polynomials with nonzero constant terms again
    // has a nonzero constant term, so the denominator stays ordinary).
    long long nk = num.min_exp();
    LaurentPoly num_ord = num.shifted(-nk);
    LaurentPoly g = poly_gcd(num_ord, den);
    if (!g.is_one()) {
        num_ord = poly_divexact(num_ord, g);
        den = poly_divexact(den, g);
    }
    // Pin the denominator's constant coefficient to 1.
    Rat c = den.coeff(0);
    s.num_ = num_ord.shifted(nk).scaled(1 / c);
    s.den_ = den.scaled(1 / c);
    return s;
}

ExtRat ValuedScalar::valuation() const {
    if (is_zero()) return ExtRat::infinity();
    return ExtRat(Rat(Int(num_.min_exp()), Int(d_)));
}

ValuedScalar ValuedScalar::rebased(long long dnew) const {
    require_positive_d(dnew);
    if (dnew % d_ != 0)
        throw MathError("rebase target " + std::to_string(dnew) +
                        " is not a multiple of current denominator " + std::to_string(d_));
    long long f = dnew / d_;
    if (f == 1) {
        ValuedScalar s = *this;
        s.d_ = dnew;
        return s;
    }
    ValuedScalar s;
    s.d_ = dnew;
    s.num_ = num_.stretched(f);
    s.den_ = den_.stretched(f);
    return s;
}

namespace {
long long common_d(const ValuedScalar& a, const ValuedScalar& b) {
    return std::lcm(a.exponent_denominator(), b.exponent_denominator());
}
} // namespace

ValuedScalar operator+(const ValuedScalar& a, const ValuedScalar& b) {
    long long d = common_d(a, b);
    ValuedScalar x = a.rebased(d), y = b.rebased(d);
    return ValuedScalar::from_fraction(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_, d);
}

ValuedScalar operator-(const ValuedScalar& a, const ValuedScalar& b) {
    long long d = common_d(a, b);
    ValuedScalar x = a.rebased(d), y = b.rebased(d);
    return ValuedScalar::from_fraction(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_, d);
}

ValuedScalar operator*(const ValuedScalar& a, const ValuedScalar& b) {
    long long d = common_d(a, b);
    ValuedScalar x = a.rebased(d), y = b.rebased(d);
    return ValuedScalar::from_fraction(x.num_ * y.num_, x.den_ * y.den_, d);
}

ValuedScalar operator/(const ValuedScalar& a, const ValuedScalar& b) {
    if (b.is_zero()) throw MathError("division by the zero scalar");
    long long d = common_d(a, b);
    ValuedScalar x = a.rebased(d), y = b.rebased(d);
    return ValuedScalar::from_fraction(x.num_ * y.den_, x.den_ * y.num_, d);
}

ValuedScalar ValuedScalar::operator-() const {
    ValuedScalar s = *this;
    s.num_ = -s.num_;
    return s;
}

ValuedScalar ValuedScalar::inverse() const {
    if (is_zero()) throw MathError("division by the zero scalar");
    return from_fraction(den_, num_, d_);
}

ValuedScalar ValuedScalar::pow(const Rat& e) const {
    if (rat_den(e) == 1) {
        Int n = rat_num(e);
        if (is_zero()) {
            if (n > 0) return zero(d_);
            if (n == 0) return one(d_);
            throw MathError("division by the zero scalar");
        }
        bool invert = n < 0;
        Int k = invert ? Int(-n) : n;
        ValuedScalar acc = one(d_);
        ValuedScalar base = *this;
        while (k > 0) {
            if ((k & 1) != 0) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return invert ? acc.inverse() : acc;
    }
    // Fractional exponent: only pure powers of t admit one inside this field.
    if (is_zero()) throw MathError("fractional exponent of the zero scalar");
    if (!den_.is_one() || !num_.is_monomial() || num_.coeff(num_.min_exp()) != 1)
        throw MathError("fractional exponent requires a pure power of t");
    Rat q = Rat(Int(num_.min_exp()), Int(d_)) * e;
    return t_power(q, d_); // rejects exponents outside (1/d)Z
}

bool ValuedScalar::operator==(const ValuedScalar& o) const {
    long long d = common_d(*this, o);
    ValuedScalar x = rebased(d), y = o.rebased(d);
    return x.num_ == y.num_ && x.den_ == y.den_;
}

std::string ValuedScalar::str() const {
    if (is_zero()) return "0";
    if (den_.is_one()) return num_.str(d_);
    return "(" + num_.str(d_) + ")/(" + den_.str(d_) + ")";
}

} // namespace gtrop
