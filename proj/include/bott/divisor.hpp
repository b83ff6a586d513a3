#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "bott/errors.hpp"
#include "bott/integers.hpp"
#include "bott/tower.hpp"

// Picard-lattice arithmetic. Classes are written in the basis D_1, ..., D_n,
// where D_i is the prime divisor of ray v_{n+i} and D'_i (ray v_i) reduces by
//
//   D'_1 = D_1,    D'_i = D_i - c_{1,i} D_1 - ... - c_{i-1,i} D_{i-1}.
//
// Numerical and linear equivalence coincide here, so a class has a unique
// D-basis representative.

namespace bott {

struct DivisorClass {
    IntVec a;  // a[i-1] is the coefficient of D_i

    DivisorClass() = default;
    explicit DivisorClass(IntVec coeffs) : a(std::move(coeffs)) {}
    DivisorClass(std::initializer_list<long long> coeffs) {
        a.reserve(coeffs.size());
        for (long long c : coeffs) a.emplace_back(c);
    }

    int length() const noexcept { return static_cast<int>(a.size()); }

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

    friend DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
        if (x.a.size() != y.a.size()) throw LengthMismatch("divisor class sum");
        DivisorClass out;
        out.a.reserve(x.a.size());
        for (std::size_t i = 0; i < x.a.size(); ++i) out.a.push_back(x.a[i] + y.a[i]);
        return out;
    }

    friend DivisorClass operator*(const Int& m, const DivisorClass& x) {
        DivisorClass out;
        out.a.reserve(x.a.size());
        for (const Int& c : x.a) out.a.push_back(m * c);
        return out;
    }
};

// A formal sum over all 2n ray divisors: r[i-1] multiplies the prime divisor
// of ray i (so indices 1..n are the D'_i and n+1..2n are the D_i).
struct RayDivisor {
    IntVec r;

    RayDivisor() = default;
    explicit RayDivisor(IntVec coeffs) : r(std::move(coeffs)) {}

    friend bool operator==(const RayDivisor&, const RayDivisor&) = default;

    friend RayDivisor operator+(const RayDivisor& x, const RayDivisor& y) {
        if (x.r.size() != y.r.size()) throw LengthMismatch("ray divisor sum");
        RayDivisor out;
        out.r.reserve(x.r.size());
        for (std::size_t i = 0; i < x.r.size(); ++i) out.r.push_back(x.r[i] + y.r[i]);
        return out;
    }
};

// Unique D-basis representative of the linear-equivalence class of d.
inline DivisorClass reduce_to_basis(const BottTower& t, const RayDivisor& d) {
    const int n = t.dimension();
    if (static_cast<int>(d.r.size()) != 2 * n)
        throw LengthMismatch("ray divisor of length " + std::to_string(d.r.size()) +
                             " on a tower with " + std::to_string(2 * n) + " rays");
    DivisorClass out;
    out.a.assign(static_cast<std::size_t>(n), Int(0));
    for (int k = 1; k <= n; ++k) {
        Int acc = d.r[static_cast<std::size_t>(n + k - 1)] + d.r[static_cast<std::size_t>(k - 1)];
        for (int i = k + 1; i <= n; ++i)
            acc -= t.numbers().c(k, i) * d.r[static_cast<std::size_t>(i - 1)];
        out.a[static_cast<std::size_t>(k - 1)] = std::move(acc);
    }
    return out;
}

// The principal divisor of the character u: sum over rays of <u, v_rho> D_rho.
// Reduces to zero in the D-basis; the tests rely on this as an independent
// derivation of the reduction relations.
inline RayDivisor principal_divisor(const BottTower& t, const IntVec& character) {
    if (static_cast<int>(character.size()) != t.dimension())
        throw LengthMismatch("character length " + std::to_string(character.size()));
    RayDivisor out;
    out.r.reserve(t.rays().size());
    for (const Ray& ray : t.rays()) out.r.push_back(dot(character, ray.v));
    return out;
}

namespace detail {

inline void require_positive_bott_numbers(const BottTower& t, const char* where) {
    if (!t.numbers().all_positive())
        throw NonPositiveBottNumbers(std::string(where) +
                                     " requires all Bott numbers positive");
}

inline void require_class_length(const BottTower& t, const DivisorClass& L) {
    if (L.length() != t.dimension())
        throw LengthMismatch("divisor class of length " + std::to_string(L.length()) +
                             " on a tower of dimension " + std::to_string(t.dimension()));
}

}  // namespace detail

// Nef iff all coefficients >= 0; ample iff all > 0. Valid in the positive
// Bott number regime, which is enforced.
inline bool is_nef(const BottTower& t, const DivisorClass& L) {
    detail::require_positive_bott_numbers(t, "is_nef");
    detail::require_class_length(t, L);
    for (const Int& c : L.a)
        if (c < 0) return false;
    return true;
}

inline bool is_ample(const BottTower& t, const DivisorClass& L) {
    detail::require_positive_bott_numbers(t, "is_ample");
    detail::require_class_length(t, L);
    for (const Int& c : L.a)
        if (c <= 0) return false;
    return true;
}

// Restriction of (a_1, ..., a_n) to the stage-i fiber tower: (a_i, ..., a_n),
// a class on vertical_subtower(t, i, n).
inline DivisorClass restrict_to_stage(const BottTower& t, const DivisorClass& L, int i) {
    detail::require_class_length(t, L);
    const int n = t.dimension();
    if (i < 2 || i > n)
        throw IndexOutOfRange("restriction stage " + std::to_string(i) + " with n = " +
                              std::to_string(n));
    DivisorClass out;
    out.a.assign(L.a.begin() + (i - 1), L.a.end());
    return out;
}

// Numerical class of the fiber over a base point: (1, 0, ..., 0).
inline DivisorClass class_of_fiber_divisor(const BottTower& t) {
    const int n = t.dimension();
    if (n < 2) throw IndexOutOfRange("fiber divisor needs n >= 2");
    DivisorClass out;
    out.a.assign(static_cast<std::size_t>(n), Int(0));
    out.a[0] = 1;
    return out;
}

}  // namespace bott
