#include "gtrop/errors.hpp"
#include "gtrop/qmatrix.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <random>

using namespace gtrop;
using namespace gtrop::testutil;

TEST_CASE("rational inverse and solve") {
    std::mt19937_64 rng(1301);
    for (int iter = 0; iter < 80; ++iter) {
        std::size_t n = 1 + rng() % 4;
        QMat a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a.at(i, j) = rand_rat(rng);
        if (qdet(a) == 0) continue;
        QMat inv = qinverse(a);
        CHECK(a * inv == QMat::identity(n));
        QVec b = rand_qvec(rng, n);
        auto x = qsolve(a, b);
        REQUIRE(x.has_value());
        CHECK(a * *x == b);
    }
    CHECK_THROWS_AS(qinverse(QMat(2, 2)), MathError);
}

TEST_CASE("kernel basis spans the kernel") {
    std::mt19937_64 rng(1302);
    for (int iter = 0; iter < 80; ++iter) {
        std::size_t r = 1 + rng() % 3, c = 1 + rng() % 4;
        QMat a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) a.at(i, j) = Rat(Int(static_cast<int>(rng() % 7) - 3));
        auto ker = qkernel_basis(a);
        CHECK(ker.size() == c - qrank(a));
        for (const QVec& v : ker) CHECK(is_zero_vec(a * v));
    }
}

TEST_CASE("inconsistent systems are detected") {
    QMat a = QMat::from_rows({{Rat(1), Rat(1)}, {Rat(2), Rat(2)}});
    CHECK(!qsolve(a, QVec{Rat(1), Rat(3)}).has_value());
    CHECK(qsolve(a, QVec{Rat(1), Rat(2)}).has_value());
}

TEST_CASE("primitive vectors") {
    CHECK(primitive(QVec{Rat(1, 2), Rat(3, 4)}) == ZVec{Int(2), Int(3)});
    CHECK(primitive(ZVec{Int(-4), Int(6)}) == ZVec{Int(-2), Int(3)});
    CHECK(primitive(ZVec{Int(0), Int(0)}) == ZVec{Int(0), Int(0)});
    CHECK(primitive(QVec{Rat(-1, 3), Rat(0)}) == ZVec{Int(-1), Int(0)});
}
