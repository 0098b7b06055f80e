#pragma once

#include "gtrop/errors.hpp"
#include "gtrop/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gtrop {

// Q with +infinity adjoined: the value domain of every tropicalization in this
// library. Addition absorbs infinity; the total order puts infinity last, so
// min/plus semiring laws hold exactly.
class ExtRat {
public:
    ExtRat() : inf_(false), v_(0) {}
    ExtRat(Rat v) : inf_(false), v_(std::move(v)) {}
    ExtRat(int v) : inf_(false), v_(v) {}
    ExtRat(const Int& v) : inf_(false), v_(v) {}

    static ExtRat infinity() {
        ExtRat e;
        e.inf_ = true;
        return e;
    }

    bool is_infinity() const { return inf_; }

    // Finite value; asking for it on +infinity is a caller bug.
    const Rat& finite() const {
        if (inf_) throw MathError("finite part of +infinity requested");
        return v_;
    }

    friend ExtRat operator+(const ExtRat& a, const ExtRat& b) {
        if (a.inf_ || b.inf_) return infinity();
        return ExtRat(a.v_ + b.v_);
    }

    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        if (a.inf_ != b.inf_) return false;
        return a.inf_ || a.v_ == b.v_;
    }
    friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }
    friend bool operator<(const ExtRat& a, const ExtRat& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
    friend bool operator<=(const ExtRat& a, const ExtRat& b) { return !(b < a); }
    friend bool operator>=(const ExtRat& a, const ExtRat& b) { return !(a < b); }

    static const ExtRat& min(const ExtRat& a, const ExtRat& b) { return b < a ? b : a; }

    std::string str() const { return inf_ ? "inf" : rat_str(v_); }

private:
    bool inf_;
    Rat v_;
};

using ExtVec = std::vector<ExtRat>;

} // namespace gtrop
