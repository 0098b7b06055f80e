#include "gtrop/zmatrix.hpp"

#include "gtrop/errors.hpp"

#include <algorithm>
#include <utility>

namespace gtrop {

ZMat ZMat::identity(std::size_t n) {
    ZMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ZMat ZMat::from_rows(const std::vector<ZVec>& rows) {
    if (rows.empty()) return ZMat();
    ZMat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw MathError("ragged row list");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

ZMat ZMat::from_cols(const std::vector<ZVec>& cols) {
    if (cols.empty()) return ZMat();
    ZMat m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != m.rows()) throw MathError("ragged column list");
        for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

ZVec ZMat::row(std::size_t i) const {
    ZVec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

ZVec ZMat::col(std::size_t j) const {
    ZVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

ZMat ZMat::transposed() const {
    ZMat m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

QMat ZMat::rational() const {
    QMat m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = Rat(at(i, j));
    return m;
}

ZMat operator*(const ZMat& a, const ZMat& b) {
    if (a.cols() != b.rows()) throw MathError("matrix product shape mismatch");
    ZMat m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) m.at(i, j) += aik * b.at(k, j);
        }
    return m;
}

ZVec operator*(const ZMat& a, const ZVec& v) {
    if (a.cols() != v.size()) throw MathError("matrix-vector shape mismatch");
    ZVec r(a.rows(), Int(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a.at(i, j) * v[j];
    return r;
}

Int zdet(ZMat a) {
    if (a.rows() != a.cols()) throw MathError("determinant of a non-square matrix");
    std::size_t n = a.rows();
    if (n == 0) return Int(1);
    // Bareiss: every division below is exact, all intermediates are minors.
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return Int(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

namespace {

struct SnfWork {
    ZMat d, u, v;

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < d.cols(); ++c) std::swap(d.at(i, c), d.at(j, c));
        for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < d.rows(); ++r) std::swap(d.at(r, i), d.at(r, j));
        for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    // row dst += c * row src
    void add_row(std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t j = 0; j < d.cols(); ++j) d.at(dst, j) += c * d.at(src, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u.at(dst, j) += c * u.at(src, j);
    }
    // col dst += c * col src
    void add_col(std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t i = 0; i < d.rows(); ++i) d.at(i, dst) += c * d.at(i, src);
        for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, dst) += c * v.at(i, src);
    }
    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < d.cols(); ++j) d.at(i, j) = -d.at(i, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u.at(i, j) = -u.at(i, j);
    }
};

} // namespace

SmithForm smith_normal_form(const ZMat& a) {
    std::size_t m = a.rows(), n = a.cols();
    SnfWork w{a, ZMat::identity(m), ZMat::identity(n)};
    std::size_t steps = std::min(m, n);
    for (std::size_t k = 0; k < steps; ++k) {
        // Deterministic pivot: smallest |entry|, then lexicographic (row, col).
        bool found = false;
        std::size_t pi = k, pj = k;
        for (std::size_t i = k; i < m; ++i)
            for (std::size_t j = k; j < n; ++j) {
                const Int& x = w.d.at(i, j);
                if (x == 0) continue;
                if (!found || abs(x) < abs(w.d.at(pi, pj))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break; // remaining block is zero
        if (pi != k) w.swap_rows(k, pi);
        if (pj != k) w.swap_cols(k, pj);

        for (;;) {
            // Clear column k; a nonzero remainder is strictly smaller than the
            // pivot, so swapping it up makes progress.
            bool again = false;
            for (std::size_t i = k + 1; i < m; ++i) {
                if (w.d.at(i, k) == 0) continue;
                Int q = w.d.at(i, k) / w.d.at(k, k); // truncating
                if (q != 0) w.add_row(i, k, -q);
                if (w.d.at(i, k) != 0) {
                    w.swap_rows(k, i);
                    again = true;
                }
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                if (w.d.at(k, j) == 0) continue;
                Int q = w.d.at(k, j) / w.d.at(k, k);
                if (q != 0) w.add_col(j, k, -q);
                if (w.d.at(k, j) != 0) {
                    w.swap_cols(k, j);
                    again = true;
                }
            }
            if (again) continue;
            // Divisibility: fold any non-multiple into row k and keep going;
            // the pivot's absolute value strictly drops each time.
            bool fixed = false;
            for (std::size_t i = k + 1; i < m && !fixed; ++i)
                for (std::size_t j = k + 1; j < n && !fixed; ++j)
                    if (w.d.at(i, j) % w.d.at(k, k) != 0) {
                        w.add_row(k, i, Int(1));
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (w.d.at(k, k) < 0) w.negate_row(k);
    }
    return SmithForm{std::move(w.u), std::move(w.d), std::move(w.v)};
}

ZVec SmithForm::diagonal() const {
    std::size_t k = std::min(d.rows(), d.cols());
    ZVec out(k);
    for (std::size_t i = 0; i < k; ++i) out[i] = d.at(i, i);
    return out;
}

Int FiniteAbelianGroup::order() const {
    Int o(1);
    for (const Int& f : invariant_factors) o *= f;
    return o;
}

std::string FiniteAbelianGroup::str() const {
    if (invariant_factors.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
        if (i) s += " x ";
        s += "Z/" + invariant_factors[i].str();
    }
    return s;
}

FiniteAbelianGroup cokernel(const ZMat& a) {
    if (a.rows() != a.cols()) throw MathError("cokernel requires a square matrix (finite index)");
    if (zdet(a) == 0) throw MathError("cokernel requires nonzero determinant (finite index)");
    SmithForm s = smith_normal_form(a);
    FiniteAbelianGroup g;
    for (const Int& d : s.diagonal())
        if (d >= 2) g.invariant_factors.push_back(d);
    return g;
}

Lattice Lattice::presented(ZMat basis) {
    if (qrank(basis.rational()) != basis.cols())
        throw MathError("lattice presentation basis is not full column rank");
    Lattice l;
    l.rank = basis.cols();
    l.ambient_basis = std::move(basis);
    return l;
}

ZVec Lattice::to_coords(const ZVec& ambient) const {
    if (!ambient_basis) {
        if (ambient.size() != rank) throw MathError("lattice coordinate shape mismatch");
        return ambient;
    }
    std::optional<QVec> c = qsolve(ambient_basis->rational(), qvec(ambient));
    if (!c) throw MathError("vector lies outside the lattice's span");
    ZVec out(rank);
    for (std::size_t i = 0; i < rank; ++i) {
        if (rat_den((*c)[i]) != 1) throw MathError("vector is not an integral lattice point");
        out[i] = rat_num((*c)[i]);
    }
    return out;
}

ZVec Lattice::from_coords(const ZVec& coords) const {
    if (!ambient_basis) {
        if (coords.size() != rank) throw MathError("lattice coordinate shape mismatch");
        return coords;
    }
    return *ambient_basis * coords;
}

bool is_unimodular_subset(const std::vector<ZVec>& vectors, std::size_t ambient_rank) {
    if (vectors.empty()) return true;
    std::size_t k = vectors.size();
    ZMat b = ZMat::from_cols(vectors);
    if (b.rows() != ambient_rank) throw MathError("vector dimension mismatch");
    if (qrank(b.rational()) != k) throw PreconditionError("vectors are linearly dependent");
    // gcd of all k x k minors.
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    Int g(0);
    for (;;) {
        ZMat minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor.at(i, j) = b.at(idx[i], j);
        g = gcd(g, zdet(std::move(minor)));
        if (g == 1) return true;
        // next combination of rows
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == ambient_rank - k + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return g == 1;
}

bool is_unimodular_subset(const std::vector<ZVec>& vectors, const Lattice& lattice) {
    std::vector<ZVec> coords;
    coords.reserve(vectors.size());
    for (const ZVec& v : vectors) coords.push_back(lattice.to_coords(v));
    return is_unimodular_subset(coords, lattice.rank);
}

namespace {

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

} // namespace

ZMat hnf_rows(ZMat a) {
    std::size_t m = a.rows(), n = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        // Gcd out column c among rows >= r.
        for (;;) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i)
                if (a.at(i, c) != 0 && (best == m || abs(a.at(i, c)) < abs(a.at(best, c)))) best = i;
            if (best == m) break; // column clear
            bool others = false;
            for (std::size_t i = r; i < m; ++i) {
                if (i == best || a.at(i, c) == 0) continue;
                Int q = a.at(i, c) / a.at(best, c);
                for (std::size_t j = 0; j < n; ++j) a.at(i, j) -= q * a.at(best, j);
                if (a.at(i, c) != 0) others = true;
            }
            if (!others) {
                if (best != r)
                    for (std::size_t j = 0; j < n; ++j) std::swap(a.at(best, j), a.at(r, j));
                break;
            }
        }
        if (a.at(r, c) == 0) continue;
        if (a.at(r, c) < 0)
            for (std::size_t j = 0; j < n; ++j) a.at(r, j) = -a.at(r, j);
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(a.at(i, c), a.at(r, c));
            if (q != 0)
                for (std::size_t j = 0; j < n; ++j) a.at(i, j) -= q * a.at(r, j);
        }
        ++r;
    }
    ZMat out(r, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = a.at(i, j);
    return out;
}

ZMat saturation_basis(const std::vector<ZVec>& gens, std::size_t ambient) {
    if (gens.empty()) return ZMat(ambient, 0);
    ZMat b = ZMat::from_cols(gens);
    if (b.rows() != ambient) throw MathError("vector dimension mismatch");
    SmithForm s = smith_normal_form(b);
    std::size_t rk = 0;
    for (const Int& d : s.diagonal())
        if (d != 0) ++rk;
    // U*B*V = D, so B = U^{-1} D V^{-1}: the rational span of the columns of B
    // is the span of the first rk columns of U^{-1}, and those columns extend
    // to a basis of Z^ambient, so their Z-span is already saturated.
    QMat uinv = qinverse(s.u.rational());
    std::vector<ZVec> cols;
    for (std::size_t j = 0; j < rk; ++j) {
        ZVec v(ambient);
        for (std::size_t i = 0; i < ambient; ++i) {
            const Rat& x = uinv.at(i, j);
            if (rat_den(x) != 1) throw MathError("unimodular inverse was not integral");
            v[i] = rat_num(x);
        }
        cols.push_back(v);
    }
    // Canonicalize: HNF of the basis written as rows, returned as columns.
    ZMat rows = hnf_rows(ZMat::from_cols(cols).transposed());
    return rows.transposed();
}

QVec QuotientLattice::project(const QVec& v) const {
    QVec r(proj.rows(), Rat(0));
    for (std::size_t i = 0; i < proj.rows(); ++i)
        for (std::size_t j = 0; j < proj.cols(); ++j) r[i] += Rat(proj.at(i, j)) * v[j];
    return r;
}

QuotientLattice quotient_by_span(const std::vector<ZVec>& gens, std::size_t ambient) {
    ZMat sat = saturation_basis(gens, ambient);
    std::size_t s = sat.cols();
    QuotientLattice q;
    q.ambient = ambient;
    q.sub_rank = s;
    if (s == 0) {
        q.proj = ZMat::identity(ambient);
        q.lift = ZMat::identity(ambient);
        return q;
    }
    // Smith form of the saturated basis has unit diagonal, so U * sat * V =
    // [I; 0]; columns of U^{-1} then split into the sublattice (first s) and a
    // complement whose classes form a basis of the quotient. The projection is
    // the matching block of U.
    SmithForm f = smith_normal_form(sat);
    for (std::size_t i = 0; i < s; ++i)
        if (f.d.at(i, i) != 1) throw MathError("saturation basis was not saturated");
    QMat uinv = qinverse(f.u.rational());
    q.proj = ZMat(ambient - s, ambient);
    q.lift = ZMat(ambient, ambient - s);
    for (std::size_t i = 0; i < ambient - s; ++i)
        for (std::size_t j = 0; j < ambient; ++j) q.proj.at(i, j) = f.u.at(s + i, j);
    for (std::size_t i = 0; i < ambient; ++i)
        for (std::size_t j = 0; j < ambient - s; ++j) {
            const Rat& x = uinv.at(i, s + j);
            if (rat_den(x) != 1) throw MathError("unimodular inverse was not integral");
            q.lift.at(i, j) = rat_num(x);
        }
    return q;
}

} // namespace gtrop
