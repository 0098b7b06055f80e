#pragma once

#include "gtrop/qmatrix.hpp"
#include "gtrop/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gtrop {

// Dense integer matrix, row-major.
class ZMat {
public:
    ZMat() : rows_(0), cols_(0) {}
    ZMat(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, Int(0)) {}

    static ZMat identity(std::size_t n);
    static ZMat from_rows(const std::vector<ZVec>& rows);
    static ZMat from_cols(const std::vector<ZVec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    ZVec row(std::size_t i) const;
    ZVec col(std::size_t j) const;
    ZMat transposed() const;
    QMat rational() const;

    friend ZMat operator*(const ZMat& a, const ZMat& b);
    friend ZVec operator*(const ZMat& a, const ZVec& v);

    bool operator==(const ZMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const ZMat& o) const { return !(*this == o); }

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

Int zdet(ZMat a); // Bareiss fraction-free elimination; square required

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
// Pivot choice: smallest absolute value, ties broken lexicographically by
// (row, column), so the output is reproducible.
struct SmithForm {
    ZMat u, d, v;
    ZVec diagonal() const;
};
SmithForm smith_normal_form(const ZMat& a);

// Finite abelian group in invariant-factor form d_1 | d_2 | ..., each >= 2.
struct FiniteAbelianGroup {
    std::vector<Int> invariant_factors;
    Int order() const;
    bool trivial() const { return invariant_factors.empty(); }
    std::string str() const; // "0" for the trivial group, else "Z/a x Z/b"
    bool operator==(const FiniteAbelianGroup&) const = default;
};

// Invariant factors of coker(A) = Z^m / (column span). Requires finite index:
// A square with nonzero determinant.
FiniteAbelianGroup cokernel(const ZMat& a);

// A rank-r lattice, optionally presented by a basis inside an ambient Z^k
// (columns of ambient_basis are the basis vectors). Computations in this
// library run in the lattice's own Z^r coordinates; the presentation converts
// ambient data into them.
struct Lattice {
    std::size_t rank = 0;
    std::optional<ZMat> ambient_basis; // k x rank, full column rank

    static Lattice standard(std::size_t r) { return Lattice{r, std::nullopt}; }
    static Lattice presented(ZMat basis);

    // Coordinates of an ambient vector in this lattice's basis; errors if the
    // vector is outside the lattice (non-integral or outside the span).
    ZVec to_coords(const ZVec& ambient) const;
    ZVec from_coords(const ZVec& coords) const;
};

// True iff the vectors extend to a Z-basis of Z^r (gcd of maximal minors = 1).
// Vectors must be linearly independent.
bool is_unimodular_subset(const std::vector<ZVec>& vectors, std::size_t ambient_rank);
// Same test inside a presented lattice: vectors are given in ambient
// coordinates and converted first.
bool is_unimodular_subset(const std::vector<ZVec>& vectors, const Lattice& lattice);

// Canonical row-style Hermite form of the lattice generated by the rows:
// echelon, positive pivots, entries above each pivot reduced into [0, pivot).
// Zero rows are dropped, so the result is a canonical basis usable for
// lattice-equality tests.
ZMat hnf_rows(ZMat a);

// Canonical basis (as columns) of the saturation span_Q(gens) ∩ Z^ambient.
ZMat saturation_basis(const std::vector<ZVec>& gens, std::size_t ambient);

// Coordinates on Z^r / span(gens): proj is surjective with kernel exactly the
// saturation of span(gens), and proj * lift = identity. The pair pins a basis
// of the quotient lattice; it is deterministic for fixed input.
struct QuotientLattice {
    std::size_t ambient = 0;
    std::size_t sub_rank = 0;
    ZMat proj; // (ambient - sub_rank) x ambient
    ZMat lift; // ambient x (ambient - sub_rank)

    std::size_t rank() const { return ambient - sub_rank; }
    ZVec project(const ZVec& v) const { return proj * v; }
    QVec project(const QVec& v) const;
};
QuotientLattice quotient_by_span(const std::vector<ZVec>& gens, std::size_t ambient);

} // namespace gtrop
