#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "bott/divisor.hpp"
#include "bott/errors.hpp"
#include "bott/integers.hpp"
#include "bott/tower.hpp"

// Curve classes in the basis dual to D_1, ..., D_n (the pairing is diagonal:
// D_j paired with basis curve i gives delta_ij). Torus-invariant curves
// correspond to walls; their classes come from the wall relation
//
//   v_u + v_{u'} + sum_{rho in wall} b_rho v_rho = 0,
//
// where u, u' are the two rays opposite the wall. With the coefficient-1
// convention on the opposite rays, the intersection of the wall curve with a
// prime divisor D_rho is 1 for rho opposite, b_rho for rho in the wall, and
// 0 otherwise. The n = 2 cases in the tests pin this sign convention.

namespace bott {

struct CurveClass {
    IntVec p;  // p[i-1] is the coefficient of the i-th dual-basis curve

    CurveClass() = default;
    explicit CurveClass(IntVec coeffs) : p(std::move(coeffs)) {}
    CurveClass(std::initializer_list<long long> coeffs) {
        p.reserve(coeffs.size());
        for (long long c : coeffs) p.emplace_back(c);
    }

    int length() const noexcept { return static_cast<int>(p.size()); }

    friend bool operator==(const CurveClass&, const CurveClass&) = default;

    friend CurveClass operator+(const CurveClass& x, const CurveClass& y) {
        if (x.p.size() != y.p.size()) throw LengthMismatch("curve class sum");
        CurveClass out;
        out.p.reserve(x.p.size());
        for (std::size_t i = 0; i < x.p.size(); ++i) out.p.push_back(x.p[i] + y.p[i]);
        return out;
    }

    friend CurveClass operator*(const Int& m, const CurveClass& x) {
        CurveClass out;
        out.p.reserve(x.p.size());
        for (const Int& c : x.p) out.p.push_back(m * c);
        return out;
    }
};

// Intersection number L . C; diagonal in these bases.
inline Int pair(const DivisorClass& L, const CurveClass& C) {
    if (L.a.size() != C.p.size())
        throw LengthMismatch("pairing a class of length " + std::to_string(L.a.size()) +
                             " with a curve of length " + std::to_string(C.p.size()));
    return dot(L.a, C.p);
}

struct WallRelation {
    Wall wall;
    IntVec coeffs;  // aligned with wall.ray_indices()
};

// Solves v_pos + v_{n+pos} + sum b_rho v_rho = 0 for the wall coefficients.
// The wall rays are part of a unimodular basis, so the solution is unique
// and integral; both facts are checked, not assumed.
inline WallRelation wall_relation(const BottTower& t, const Wall& w) {
    const int n = t.dimension();
    if (w.lower_cone().dimension() != n)
        throw LengthMismatch("wall dimension does not match tower");

    const std::vector<int> wall_rays = w.ray_indices();
    IntMat a(static_cast<std::size_t>(n), IntVec(wall_rays.size()));
    for (std::size_t col = 0; col < wall_rays.size(); ++col) {
        const IntVec& v = t.ray(wall_rays[col]).v;
        for (int row = 0; row < n; ++row)
            a[static_cast<std::size_t>(row)][col] = v[static_cast<std::size_t>(row)];
    }
    IntVec rhs(static_cast<std::size_t>(n));
    {
        const IntVec& u = t.ray(w.position()).v;
        const IntVec& u2 = t.ray(n + w.position()).v;
        for (int row = 0; row < n; ++row)
            rhs[static_cast<std::size_t>(row)] =
                -(u[static_cast<std::size_t>(row)] + u2[static_cast<std::size_t>(row)]);
    }

    auto sol = solve_integer_system(a, rhs);
    if (!sol)
        throw SingularSystem("wall relation at position " + std::to_string(w.position()) +
                             " of cone " + std::to_string(w.lower_cone().bits()));

    // Exact reconstruction: the relation must sum to the zero vector.
    IntVec check(static_cast<std::size_t>(n), Int(0));
    for (int row = 0; row < n; ++row) {
        check[static_cast<std::size_t>(row)] =
            t.ray(w.position()).v[static_cast<std::size_t>(row)] +
            t.ray(n + w.position()).v[static_cast<std::size_t>(row)];
        for (std::size_t col = 0; col < wall_rays.size(); ++col)
            check[static_cast<std::size_t>(row)] +=
                (*sol)[col] * t.ray(wall_rays[col]).v[static_cast<std::size_t>(row)];
    }
    if (!is_zero_vector(check))
        throw SingularSystem("wall relation failed to reconstruct");

    return WallRelation{w, std::move(*sol)};
}

// Dual-basis class of the invariant curve of a wall: coefficient i is the
// intersection with D_i (ray v_{n+i}), read off the wall relation.
inline CurveClass invariant_curve_class(const BottTower& t, const Wall& w) {
    const int n = t.dimension();
    const WallRelation rel = wall_relation(t, w);
    const std::vector<int> wall_rays = w.ray_indices();

    CurveClass out;
    out.p.assign(static_cast<std::size_t>(n), Int(0));
    out.p[static_cast<std::size_t>(w.position() - 1)] = 1;  // v_{n+pos} is opposite
    for (std::size_t col = 0; col < wall_rays.size(); ++col)
        if (wall_rays[col] > n)
            out.p[static_cast<std::size_t>(wall_rays[col] - n - 1)] = rel.coeffs[col];
    return out;
}

}  // namespace bott
