#include "gtrop/errors.hpp"
#include "gtrop/zmatrix.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace gtrop;
using namespace gtrop::testutil;

namespace {

ZMat zm(std::vector<ZVec> rows) { return ZMat::from_rows(rows); }

// Independent oracle for the Smith diagonal: with g_i the gcd of all i x i
// minors (g_0 = 1), the i-th diagonal entry is g_i / g_{i-1}; once every
// minor of some size vanishes, all later entries are 0.
ZVec snf_diagonal_by_minors(const ZMat& a) {
    std::size_t k = std::min(a.rows(), a.cols());
    ZVec out;
    Int gprev(1);
    for (std::size_t s = 1; s <= k; ++s) {
        Int g(0);
        std::vector<std::size_t> ri(s), ci(s);
        auto init = [&](std::vector<std::size_t>& v) {
            for (std::size_t i = 0; i < s; ++i) v[i] = i;
        };
        auto next = [&](std::vector<std::size_t>& v, std::size_t limit) {
            std::size_t i = s;
            while (i > 0 && v[i - 1] == limit - s + (i - 1)) --i;
            if (i == 0) return false;
            ++v[i - 1];
            for (std::size_t j = i; j < s; ++j) v[j] = v[j - 1] + 1;
            return true;
        };
        init(ri);
        do {
            init(ci);
            do {
                ZMat minor(s, s);
                for (std::size_t i = 0; i < s; ++i)
                    for (std::size_t j = 0; j < s; ++j) minor.at(i, j) = a.at(ri[i], ci[j]);
                g = gcd(g, zdet(minor));
            } while (next(ci, a.cols()));
        } while (next(ri, a.rows()));
        if (g == 0) {
            for (std::size_t i = out.size(); i < k; ++i) out.push_back(Int(0));
            return out;
        }
        out.push_back(g / gprev);
        gprev = g;
    }
    return out;
}

void check_snf_contract(const ZMat& a) {
    SmithForm s = smith_normal_form(a);
    CHECK(s.u * a * s.v == s.d);
    CHECK(abs(zdet(s.u)) == 1);
    CHECK(abs(zdet(s.v)) == 1);
    ZVec diag = s.diagonal();
    for (std::size_t i = 0; i < diag.size(); ++i) {
        CHECK(diag[i] >= 0);
        if (i + 1 < diag.size() && diag[i] != 0) CHECK(diag[i + 1] % diag[i] == 0);
        if (i + 1 < diag.size() && diag[i] == 0) CHECK(diag[i + 1] == 0);
    }
    // off-diagonal zero
    for (std::size_t i = 0; i < s.d.rows(); ++i)
        for (std::size_t j = 0; j < s.d.cols(); ++j)
            if (i != j) CHECK(s.d.at(i, j) == 0);
    CHECK(diag == snf_diagonal_by_minors(a));
}

} // namespace

TEST_CASE("smith normal form pins the worked examples") {
    SmithForm s = smith_normal_form(zm({{Int(2), Int(4)}, {Int(6), Int(8)}}));
    CHECK(s.diagonal() == ZVec{Int(2), Int(4)});
    check_snf_contract(zm({{Int(2), Int(4)}, {Int(6), Int(8)}}));

    CHECK(smith_normal_form(ZMat::identity(3)).d == ZMat::identity(3));

    CHECK(smith_normal_form(zm({{Int(1), Int(0)}, {Int(1), Int(2)}})).diagonal() ==
          ZVec{Int(1), Int(2)});
}

TEST_CASE("smith normal form matches the minors oracle on random matrices") {
    std::mt19937_64 rng(7001);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        check_snf_contract(rand_zmat(rng, r, c));
    }
    // degenerate shapes
    check_snf_contract(ZMat(3, 3));
    check_snf_contract(zm({{Int(0), Int(7)}}));
}

TEST_CASE("cokernel invariant factors") {
    CHECK(cokernel(zm({{Int(1), Int(0)}, {Int(0), Int(2)}})) ==
          FiniteAbelianGroup{{Int(2)}});
    CHECK(cokernel(ZMat::identity(4)).trivial());
    CHECK(cokernel(zm({{Int(2), Int(1)}, {Int(1), Int(2)}})) ==
          FiniteAbelianGroup{{Int(3)}});
    CHECK(cokernel(zm({{Int(2), Int(1)}, {Int(1), Int(2)}})).str() == "Z/3");

    CHECK_THROWS_AS(cokernel(ZMat(2, 3)), MathError);
    CHECK_THROWS_AS(cokernel(zm({{Int(1), Int(2)}, {Int(2), Int(4)}})), MathError);

    std::mt19937_64 rng(7002);
    int done = 0;
    while (done < 50) {
        ZMat a = rand_zmat(rng, 3, 3, -4, 4);
        Int d = zdet(a);
        if (d == 0) continue;
        CHECK(cokernel(a).order() == abs(d));
        ++done;
    }
}

TEST_CASE("unimodular subset test") {
    CHECK(is_unimodular_subset({{Int(1), Int(0)}}, 2));
    CHECK_FALSE(is_unimodular_subset({{Int(1), Int(0)}, {Int(1), Int(2)}}, 2));
    CHECK(is_unimodular_subset({{Int(1), Int(0)}, {Int(1), Int(1)}}, 2));
    CHECK(is_unimodular_subset({}, 3));
    // (2,4,1) alone: gcd of 1x1 minors is 1
    CHECK(is_unimodular_subset({{Int(2), Int(4), Int(1)}}, 3));

    CHECK_THROWS_AS(is_unimodular_subset({{Int(1), Int(1)}, {Int(2), Int(2)}}, 2),
                    PreconditionError);
}

TEST_CASE("unimodularity is invariant under unimodular change of coordinates") {
    std::mt19937_64 rng(7003);
    for (int iter = 0; iter < 60; ++iter) {
        std::size_t n = 2 + rng() % 3;
        std::size_t k = 1 + rng() % n;
        std::vector<ZVec> vecs;
        for (std::size_t i = 0; i < k; ++i) vecs.push_back(rand_zvec(rng, n));
        if (qrank(ZMat::from_cols(vecs).rational()) != k) continue;
        ZMat u = rand_unimodular(rng, n);
        std::vector<ZVec> moved;
        for (const ZVec& v : vecs) moved.push_back(u * v);
        CHECK(is_unimodular_subset(vecs, n) == is_unimodular_subset(moved, n));
    }
}

TEST_CASE("the sum-zero lattice of rank 2 rejects the weight-doubled chamber generators") {
    // Basis f_i = e_i - e_{i+1} of {x in Z^3 : sum x = 0}.
    ZMat basis = ZMat::from_cols({{Int(1), Int(-1), Int(0)}, {Int(0), Int(1), Int(-1)}});
    Lattice n_sl3 = Lattice::presented(basis);
    CHECK(n_sl3.rank == 2);

    ZVec g1{Int(2), Int(-1), Int(-1)}; // 2 f1 + f2
    ZVec g2{Int(1), Int(1), Int(-2)};  // f1 + 2 f2
    CHECK(n_sl3.to_coords(g1) == ZVec{Int(2), Int(1)});
    CHECK(n_sl3.to_coords(g2) == ZVec{Int(1), Int(2)});
    CHECK_FALSE(is_unimodular_subset({g1, g2}, n_sl3));

    CHECK_THROWS_AS(n_sl3.to_coords(ZVec{Int(1), Int(0), Int(0)}), MathError); // outside span
    CHECK(n_sl3.from_coords(ZVec{Int(2), Int(1)}) == g1);
}

TEST_CASE("hermite form is a canonical lattice basis") {
    // Two generating sets of the lattice 2Z x 3Z.
    ZMat h1 = hnf_rows(zm({{Int(2), Int(0)}, {Int(0), Int(3)}, {Int(2), Int(3)}}));
    ZMat h2 = hnf_rows(zm({{Int(2), Int(3)}, {Int(2), Int(6)}}));
    CHECK(h1 == h2);
    CHECK(h1.rows() == 2);

    std::mt19937_64 rng(7004);
    for (int iter = 0; iter < 60; ++iter) {
        std::size_t n = 2 + rng() % 3;
        ZMat a = rand_zmat(rng, n, n, -4, 4);
        ZMat u = rand_unimodular(rng, n);
        // Row span is unchanged under left-multiplication by a unimodular matrix.
        CHECK(hnf_rows(a) == hnf_rows(u * a));
    }
}

TEST_CASE("saturation and quotient coordinates") {
    ZMat s = saturation_basis({{Int(2), Int(0)}}, 2);
    CHECK(s.cols() == 1);
    CHECK(s.col(0) == ZVec{Int(1), Int(0)});

    // Index-2 sublattice saturates to the whole plane.
    ZMat s2 = saturation_basis({{Int(1), Int(1)}, {Int(1), Int(-1)}}, 2);
    CHECK(hnf_rows(s2.transposed()) == ZMat::identity(2));

    QuotientLattice q = quotient_by_span({{Int(1), Int(0)}}, 2);
    CHECK(q.rank() == 1);
    CHECK(q.project(ZVec{Int(1), Int(0)}) == ZVec{Int(0)});
    CHECK(q.proj * q.lift == ZMat::identity(1));

    // Quotient by a saturated rank-1 sublattice of Z^3.
    QuotientLattice q3 = quotient_by_span({{Int(1), Int(2), Int(3)}}, 3);
    CHECK(q3.rank() == 2);
    CHECK(is_zero_vec(q3.project(ZVec{Int(2), Int(4), Int(6)})));
    CHECK(q3.proj * q3.lift == ZMat::identity(2));

    // Quotient by nothing.
    QuotientLattice q0 = quotient_by_span({}, 2);
    CHECK(q0.rank() == 2);
    CHECK(q0.project(ZVec{Int(5), Int(7)}) == ZVec{Int(5), Int(7)});
}
