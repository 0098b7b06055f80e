#pragma once

#include "gtrop/qmatrix.hpp"
#include "gtrop/zmatrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace gtrop {

// Canonical double-description pair for {x : <a,x> >= 0 for all normals a}:
//   - lineality: canonical basis (Hermite form) of the lineality lattice
//     (the maximal subspace contained in the set, intersected with Z^dim);
//   - rays: primitive extreme-ray representatives, orthogonal to the
//     lineality space, sorted lexicographically.
// Two inequality systems cut the same cone iff their DDPairs are equal.
struct DDPair {
    std::vector<ZVec> lineality;
    std::vector<ZVec> rays;
};

DDPair dd_from_inequalities(std::size_t dim, const std::vector<ZVec>& normals);

// Rational polyhedral cone allowed to contain lines: the return shape of dual
// cones and of Weyl chambers with central directions. Stored canonically, so
// equality is structural.
class GenCone {
public:
    GenCone() = default;

    static GenCone from_generators(std::size_t dim, const std::vector<ZVec>& rays,
                                   const std::vector<ZVec>& lineality);
    static GenCone full_space(std::size_t dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const;
    const std::vector<ZVec>& rays() const { return rays_; }
    const std::vector<ZVec>& lineality() const { return lineality_; }
    // rays together with +/- lineality basis vectors
    std::vector<ZVec> generator_list() const;

    // Defining halfspaces: <ineq, x> >= 0 and <eq, x> = 0.
    const std::vector<ZVec>& inequality_normals() const { return ineqs_; }
    const std::vector<ZVec>& equality_normals() const { return eqs_; }

    bool contains(const QVec& x) const;
    bool contains(const ZVec& x) const;
    GenCone dual() const;

    bool operator==(const GenCone& o) const {
        return ambient_ == o.ambient_ && rays_ == o.rays_ && lineality_ == o.lineality_;
    }
    bool operator!=(const GenCone& o) const { return !(*this == o); }

    std::string str() const;

private:
    friend GenCone gencone_from_dd(std::size_t dim, DDPair dd, std::vector<ZVec> ineqs,
                                   std::vector<ZVec> eqs);
    std::size_t ambient_ = 0;
    std::vector<ZVec> rays_, lineality_;
    std::vector<ZVec> ineqs_, eqs_;
};

// Strictly convex rational polyhedral cone with its canonical double
// description: primitive extreme rays plus facet normals and span equations.
class Cone {
public:
    Cone() = default;

    // Throws MathError when the generated cone contains a line.
    static Cone from_generators(std::size_t dim, const std::vector<ZVec>& gens);
    static Cone zero(std::size_t dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return dim_; }
    bool is_zero() const { return rays_.empty(); }
    const std::vector<ZVec>& rays() const { return rays_; }
    const std::vector<ZVec>& facet_normals() const { return facet_normals_; }
    const std::vector<ZVec>& span_equations() const { return span_eqs_; }

    bool contains(const QVec& x) const;
    bool contains(const ZVec& x) const;
    bool contains_in_interior(const QVec& x) const; // relative interior
    QVec relative_interior_point() const;           // sum of the rays

    struct Face {
        std::vector<std::size_t> ray_indices; // into rays() of the host cone
        Cone cone;
    };
    // All faces, {0} and the cone itself included, sorted by (dim, rays).
    std::vector<Face> faces() const;
    bool is_face_of(const Cone& sigma) const;

    bool operator==(const Cone& o) const { return ambient_ == o.ambient_ && rays_ == o.rays_; }
    bool operator!=(const Cone& o) const { return !(*this == o); }
    bool operator<(const Cone& o) const; // deterministic order: (dim, rays)

    std::string str() const;

private:
    std::size_t ambient_ = 0;
    std::size_t dim_ = 0;
    std::vector<ZVec> rays_;
    std::vector<ZVec> facet_normals_;
    std::vector<ZVec> span_eqs_;
};

GenCone dual_cone(const Cone& sigma);
Cone intersect(const Cone& a, const Cone& b);

} // namespace gtrop
