#pragma once

#include "gtrop/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace gtrop {

// Dense matrix over Q, row-major. Small and exact; no pivot-size heuristics
// beyond determinism.
class QMat {
public:
    QMat() : rows_(0), cols_(0) {}
    QMat(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, Rat(0)) {}

    static QMat identity(std::size_t n);
    static QMat from_rows(const std::vector<QVec>& rows);
    static QMat from_cols(const std::vector<QVec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    QVec row(std::size_t i) const;
    QVec col(std::size_t j) const;
    QMat transposed() const;

    friend QMat operator*(const QMat& a, const QMat& b);
    friend QVec operator*(const QMat& a, const QVec& v);
    friend QMat operator+(const QMat& a, const QMat& b);
    friend QMat operator-(const QMat& a, const QMat& b);

    bool operator==(const QMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const QMat& o) const { return !(*this == o); }

private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

Rat qdet(QMat a);                 // square required
QMat qinverse(const QMat& a);     // throws MathError on singular input
std::size_t qrank(QMat a);

// One solution of A x = b when the system is consistent (free variables 0).
std::optional<QVec> qsolve(const QMat& a, const QVec& b);

// Deterministic basis of ker(A) from reduced row echelon form.
std::vector<QVec> qkernel_basis(const QMat& a);

Rat qdot(const QVec& a, const QVec& b);
Int zdot(const ZVec& a, const ZVec& b);

QVec qvec(const ZVec& v);
QVec operator+(const QVec& a, const QVec& b);
QVec operator-(const QVec& a, const QVec& b);
QVec qscale(const Rat& c, const QVec& v);
bool is_zero_vec(const QVec& v);
bool is_zero_vec(const ZVec& v);

// Primitive integer vector on the ray through v (direction preserved);
// the zero vector maps to itself.
ZVec primitive(const QVec& v);
ZVec primitive(const ZVec& v);

std::string vec_str(const QVec& v);
std::string vec_str(const ZVec& v);

} // namespace gtrop
