#include "gtrop/errors.hpp"
#include "gtrop/scalar_parser.hpp"
#include "gtrop/valued_scalar.hpp"

#include <doctest.h>

#include <random>

using namespace gtrop;

namespace {

Rat rq(long long n, long long d = 1) { return Rat(Int(n), Int(d)); }

// Random nonzero scalar: a fraction of short Laurent polynomials.
ValuedScalar random_scalar(std::mt19937_64& rng, long long d) {
    std::uniform_int_distribution<int> nterms(1, 3), expo(-4, 8), co(-5, 5);
    auto poly = [&]() {
        LaurentPoly p;
        int k = nterms(rng);
        for (int i = 0; i < k; ++i) {
            int c = co(rng);
            if (c == 0) c = 1;
            p.set(expo(rng), Rat(c));
        }
        if (p.is_zero()) p.set(0, Rat(1));
        return p;
    };
    return ValuedScalar::from_fraction(poly(), poly(), d);
}

} // namespace

TEST_CASE("parse_scalar pins the worked examples") {
    ValuedScalar a = parse_scalar("t^2 + 3*t^(1/2)", 2);
    CHECK(a.valuation() == ExtRat(rq(1, 2)));

    ValuedScalar z = parse_scalar("0", 1);
    CHECK(z.is_zero());
    CHECK(z.valuation().is_infinity());

    ValuedScalar f = parse_scalar("(t^2 - t^3)/(2 - t)", 1);
    CHECK(f.valuation() == ExtRat(rq(2)));

    // (t^2 - t^3)/(2 - t) has no common factor with the denominator, so the
    // canonical denominator is 1 - t/2 after rescaling.
    CHECK(f.den().coeff(0) == 1);
    CHECK(f.den().coeff(1) == rq(-1, 2));
}

TEST_CASE("valuation basics") {
    CHECK(parse_scalar("7", 1).valuation() == ExtRat(0));
    CHECK(parse_scalar("-3/4", 2).valuation() == ExtRat(0));
    CHECK(parse_scalar("t^(-3)", 1).valuation() == ExtRat(-3));
    CHECK(parse_scalar("t^(1/2)", 2).valuation() == ExtRat(rq(1, 2)));

    // t^(1/2) * t^(1/3) after rebasing to d = 6.
    ValuedScalar x = parse_scalar("t^(1/2)", 2).rebased(6);
    ValuedScalar y = parse_scalar("t^(1/3)", 3).rebased(6);
    CHECK((x * y).valuation() == ExtRat(rq(5, 6)));
}

TEST_CASE("rebase preserves the element") {
    ValuedScalar t1 = parse_scalar("t", 1);
    ValuedScalar t2 = t1.rebased(2);
    CHECK(t2.exponent_denominator() == 2);
    CHECK(t2.valuation() == ExtRat(1));
    CHECK(t2 == t1);

    ValuedScalar c = parse_scalar("3", 1);
    CHECK(c.rebased(5) == c);

    ValuedScalar m = parse_scalar("t^(1/2) + t", 2).rebased(6);
    CHECK(m.valuation() == ExtRat(rq(1, 2)));

    CHECK_THROWS_AS(t2.rebased(3), MathError); // 2 does not divide 3
}

TEST_CASE("parser rejects bad input") {
    CHECK_THROWS_AS(parse_scalar("t^(1/3)", 2), MathError);   // exponent outside (1/2)Z
    CHECK_THROWS_AS(parse_scalar("1/(t - t)", 1), MathError); // division by zero scalar
    CHECK_THROWS_AS(parse_scalar("2^(1/2)", 2), MathError);   // fractional power of a constant
    CHECK_THROWS_AS(parse_scalar("", 1), ParseError);
    CHECK_THROWS_AS(parse_scalar("t +", 1), ParseError);
    CHECK_THROWS_AS(parse_scalar("(t", 1), ParseError);
    CHECK_THROWS_AS(parse_scalar("t^", 2), ParseError);
    CHECK_THROWS_AS(parse_scalar("t t", 1), ParseError); // trailing input
    CHECK_THROWS_AS(parse_scalar("x", 1), ParseError);

    try {
        parse_scalar("t + @", 1);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("grammar corners") {
    // The rat token is greedy after '^': t^1/2 is t^(1/2).
    CHECK(parse_scalar("t^1/2", 2) == parse_scalar("t^(1/2)", 2));
    // Rational literals reduce.
    CHECK(parse_scalar("4/2", 1) == parse_scalar("2", 1));
    // Integer powers of arbitrary expressions.
    CHECK(parse_scalar("(1 + t)^2", 1) == parse_scalar("1 + 2*t + t^2", 1));
    CHECK(parse_scalar("2^3", 1) == parse_scalar("8", 1));
    CHECK(parse_scalar("t^-2", 1) == parse_scalar("t^(-2)", 1));
    // A coefficient-1 monomial in t admits fractional powers.
    CHECK(parse_scalar("(t^2)^(1/2)", 1) == parse_scalar("t", 1));
    // Leading minus.
    CHECK(parse_scalar("-t + t", 1).is_zero());
    CHECK(parse_scalar("-3*t", 1) == parse_scalar("0 - 3*t", 1));
    // Division chains associate left to right.
    CHECK(parse_scalar("8/2/2", 1) == parse_scalar("2", 1));
}

TEST_CASE("field arithmetic round-trips exactly") {
    std::mt19937_64 rng(20240817);
    for (int iter = 0; iter < 200; ++iter) {
        long long d = 1 + static_cast<long long>(rng() % 3);
        ValuedScalar x = random_scalar(rng, d);
        ValuedScalar y = random_scalar(rng, d);
        if (!y.is_zero()) CHECK((x / y) * y == x);
        CHECK(x + y == y + x);
        CHECK((x - y) + y == x);
        CHECK(x * (y + y) == x * y + x * y);
    }
}

TEST_CASE("valuation is additive and ultrametric") {
    std::mt19937_64 rng(911);
    for (int iter = 0; iter < 300; ++iter) {
        long long d = 1 + static_cast<long long>(rng() % 3);
        ValuedScalar x = random_scalar(rng, d);
        ValuedScalar y = random_scalar(rng, d);
        ExtRat vx = x.valuation(), vy = y.valuation();
        CHECK((x * y).valuation() == vx + vy);
        ExtRat vsum = (x + y).valuation();
        CHECK(vsum >= ExtRat::min(vx, vy));
        if (vx != vy) CHECK(vsum == ExtRat::min(vx, vy));
    }
}

TEST_CASE("printing then parsing is the identity on canonical forms") {
    std::mt19937_64 rng(4242);
    for (int iter = 0; iter < 200; ++iter) {
        long long d = 1 + static_cast<long long>(rng() % 3);
        ValuedScalar x = random_scalar(rng, d);
        ValuedScalar back = parse_scalar(x.str(), d);
        CHECK(back == x);
        CHECK(back.str() == x.str());
    }
    // A few fixed shapes.
    for (const char* s : {"0", "1", "-t + t^2", "(1 - t)/(1 + t)", "3/4*t^(1/2)", "t^(-2) + 1"}) {
        ValuedScalar x = parse_scalar(s, 2);
        CHECK(parse_scalar(x.str(), 2) == x);
    }
}

TEST_CASE("canonical form is stable under equivalent presentations") {
    // Same element assembled two ways must print identically.
    ValuedScalar a = parse_scalar("(t^2 + t^3)/(1 + t)", 1);
    ValuedScalar b = parse_scalar("t^2", 1);
    CHECK(a == b);
    CHECK(a.str() == b.str());

    ValuedScalar c = parse_scalar("(2 + 2*t)/(4 - 4*t)", 1);
    ValuedScalar e = parse_scalar("(1 + t)/(2 - 2*t)", 1);
    CHECK(c == e);
    CHECK(c.str() == e.str());
}
