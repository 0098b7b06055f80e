#include "gtrop/laurent.hpp"

#include "gtrop/errors.hpp"

#include <utility>
#include <vector>

namespace gtrop {

LaurentPoly LaurentPoly::constant(const Rat& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const Rat& c, long long e) {
    LaurentPoly p;
    if (c != 0) p.terms_[e] = c;
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

long long LaurentPoly::min_exp() const {
    if (terms_.empty()) throw MathError("min_exp of the zero polynomial");
    return terms_.begin()->first;
}

long long LaurentPoly::max_exp() const {
    if (terms_.empty()) throw MathError("max_exp of the zero polynomial");
    return terms_.rbegin()->first;
}

Rat LaurentPoly::coeff(long long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void LaurentPoly::set(long long e, const Rat& c) {
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = c;
}

LaurentPoly LaurentPoly::shifted(long long k) const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_[e + k] = c;
    return p;
}

LaurentPoly LaurentPoly::stretched(long long f) const {
    if (f < 1) throw MathError("stretch factor must be positive");
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_[e * f] = c;
    return p;
}

LaurentPoly LaurentPoly::scaled(const Rat& c) const {
    LaurentPoly p;
    if (c == 0) return p;
    for (const auto& [e, k] : terms_) p.terms_[e] = k * c;
    return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p = a;
    for (const auto& [e, c] : b.terms_) p.set(e, p.coeff(e) + c);
    return p;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p = a;
    for (const auto& [e, c] : b.terms_) p.set(e, p.coeff(e) - c);
    return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) p.set(ea + eb, p.coeff(ea + eb) + ca * cb);
    return p;
}

LaurentPoly LaurentPoly::operator-() const { return scaled(Rat(-1)); }

std::string LaurentPoly::str(long long d) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat q{Int(e), Int(d)}; // reduced automatically
        std::string tpart;
        if (q == 1)
            tpart = "t";
        else if (q != 0) {
            if (rat_den(q) == 1 && q > 0)
                tpart = "t^" + rat_str(q);
            else
                tpart = "t^(" + rat_str(q) + ")";
        }
        Rat mag = c < 0 ? Rat(-c) : c;
        std::string piece;
        if (tpart.empty())
            piece = rat_str(mag);
        else if (mag == 1)
            piece = tpart;
        else
            piece = rat_str(mag) + "*" + tpart;
        if (first) {
            out += (c < 0 ? "-" : "") + piece;
            first = false;
        } else {
            out += (c < 0 ? " - " : " + ") + piece;
        }
    }
    return out;
}

namespace {

// Dense coefficient view of an ordinary polynomial, index = exponent.
std::vector<Rat> dense(const LaurentPoly& p) {
    std::vector<Rat> v;
    if (p.is_zero()) return v;
    if (p.min_exp() < 0) throw MathError("Laurent polynomial where an ordinary one was required");
    v.assign(static_cast<std::size_t>(p.max_exp()) + 1, Rat(0));
    for (const auto& [e, c] : p.terms()) v[static_cast<std::size_t>(e)] = c;
    return v;
}

LaurentPoly sparse(const std::vector<Rat>& v) {
    LaurentPoly p;
    for (std::size_t i = 0; i < v.size(); ++i) p.set(static_cast<long long>(i), v[i]);
    return p;
}

void trim(std::vector<Rat>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// Euclidean remainder, dense; divisor nonzero.
std::vector<Rat> poly_rem(std::vector<Rat> r, const std::vector<Rat>& b) {
    while (r.size() >= b.size() && !r.empty()) {
        Rat q = r.back() / b.back();
        std::size_t off = r.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) r[off + i] -= q * b[i];
        trim(r);
    }
    return r;
}

} // namespace

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
    std::vector<Rat> x = dense(a), y = dense(b);
    while (!y.empty()) {
        std::vector<Rat> r = poly_rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    if (x.empty()) return LaurentPoly();
    Rat lead = x.back();
    for (Rat& c : x) c /= lead;
    return sparse(x);
}

LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw MathError("polynomial division by zero");
    if (a.is_zero()) return LaurentPoly();
    std::vector<Rat> r = dense(a), d = dense(b);
    std::vector<Rat> q(r.size(), Rat(0));
    while (r.size() >= d.size() && !r.empty()) {
        Rat c = r.back() / d.back();
        std::size_t off = r.size() - d.size();
        q[off] = c;
        for (std::size_t i = 0; i < d.size(); ++i) r[off + i] -= c * d[i];
        trim(r);
    }
    if (!r.empty()) throw MathError("polynomial division was not exact");
    return sparse(q);
}

} // namespace gtrop
