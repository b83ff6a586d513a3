#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bott/divisor.hpp"
#include "bott/errors.hpp"
#include "bott/integers.hpp"
#include "bott/point.hpp"
#include "bott/tower.hpp"

// Seshadri constants of nef line bundles on Bott towers with positive Bott
// numbers. For L = (a_1, ..., a_n) at a point x with stratum index
// i0 = gamma_index(x):
//
//   epsilon(L, x) = min{ a_i : i >= i0 },
//
// attained by one of the filtration curves, and globally
//
//   inf_x epsilon = min_i a_i,    sup_x epsilon = a_n.
//
// The equivalent peel-one-stage recursion (restrict to the fiber tower over
// the base point, recurse, and take min with a_1 exactly on the bottom
// stratum) is kept as an independent implementation for cross-validation.

namespace bott {

// Hypothesis handling: Enforce rejects non-positive Bott numbers and non-nef
// classes; Formal evaluates the same formula anyway, outside the regime in
// which it is established.
enum class Hypotheses { Enforce, Formal };

struct SeshadriResult {
    Int value;          // equals a[witness_index - 1]
    int witness_index;  // smallest index attaining the value; a Seshadri curve
    int gamma_index;    // stratum of the query point; <= witness_index
};

namespace detail {

inline void require_seshadri_hypotheses(const BottTower& t, const DivisorClass& L,
                                        Hypotheses hyp) {
    require_class_length(t, L);
    if (hyp == Hypotheses::Formal) return;
    require_positive_bott_numbers(t, "seshadri");
    if (!is_nef(t, L)) throw NotNef("class is not nef; use the formal mode to evaluate anyway");
}

}  // namespace detail

inline SeshadriResult seshadri_at(const BottTower& t, const DivisorClass& L, const CoxPoint& x,
                                  Hypotheses hyp = Hypotheses::Enforce) {
    detail::require_seshadri_hypotheses(t, L, hyp);
    const int i0 = gamma_index(t, x);
    int best = i0;
    for (int i = i0 + 1; i <= t.dimension(); ++i)
        if (L.a[static_cast<std::size_t>(i - 1)] < L.a[static_cast<std::size_t>(best - 1)])
            best = i;
    return SeshadriResult{L.a[static_cast<std::size_t>(best - 1)], best, i0};
}

struct StratumValue {
    int stratum;  // points on curve i but not curve i-1
    Int value;

    friend bool operator==(const StratumValue&, const StratumValue&) = default;
};

// Per-stratum values: stratum i carries min{a_j : j >= i}.
inline std::vector<StratumValue> strata_report(const BottTower& t, const DivisorClass& L,
                                               Hypotheses hyp = Hypotheses::Enforce) {
    detail::require_seshadri_hypotheses(t, L, hyp);
    const int n = t.dimension();
    std::vector<StratumValue> out(static_cast<std::size_t>(n));
    Int running = L.a[static_cast<std::size_t>(n - 1)];
    for (int i = n; i >= 1; --i) {
        if (L.a[static_cast<std::size_t>(i - 1)] < running)
            running = L.a[static_cast<std::size_t>(i - 1)];
        out[static_cast<std::size_t>(i - 1)] = StratumValue{i, running};
    }
    return out;
}

struct GlobalExtreme {
    Int value;
    int stratum;       // stratum on which the value is attained
    CoxPoint witness;  // a point of that stratum realizing the value
};

namespace detail {

// All pairs (0 : 1) except pair i, which is (1 : 1): a point of stratum i.
inline CoxPoint stratum_witness(int n, int i) {
    std::vector<CoordEntry> entries;
    entries.reserve(static_cast<std::size_t>(2 * n));
    for (int k = 1; k <= n; ++k) {
        entries.push_back(k == i ? CoordEntry::of(Rat(1)) : CoordEntry::of(Rat(0)));
        entries.push_back(CoordEntry::of(Rat(1)));
    }
    return CoxPoint(std::move(entries));
}

}  // namespace detail

// Global infimum min_i a_i, with a witness on the stratum of the smallest
// coefficient (smallest such index, for determinism).
inline GlobalExtreme seshadri_inf(const BottTower& t, const DivisorClass& L,
                                  Hypotheses hyp = Hypotheses::Enforce) {
    detail::require_seshadri_hypotheses(t, L, hyp);
    int arg = 1;
    for (int i = 2; i <= t.dimension(); ++i)
        if (L.a[static_cast<std::size_t>(i - 1)] < L.a[static_cast<std::size_t>(arg - 1)])
            arg = i;
    return GlobalExtreme{L.a[static_cast<std::size_t>(arg - 1)], arg,
                         detail::stratum_witness(t.dimension(), arg)};
}

// Global supremum a_n, attained at every point outside the (n-1)-st curve —
// in particular at general points.
inline GlobalExtreme seshadri_sup(const BottTower& t, const DivisorClass& L,
                                  Hypotheses hyp = Hypotheses::Enforce) {
    detail::require_seshadri_hypotheses(t, L, hyp);
    const int n = t.dimension();
    return GlobalExtreme{L.a[static_cast<std::size_t>(n - 1)], n,
                         detail::stratum_witness(n, n)};
}

namespace detail {

// Literal one-stage recursion, independent of the closed form above. Used by
// the equivalence tests; not the production path.
inline Int seshadri_at_recursive(const BottTower& t, const DivisorClass& L, const CoxPoint& x,
                                 Hypotheses hyp = Hypotheses::Enforce) {
    require_seshadri_hypotheses(t, L, hyp);
    validate_point(t, x);
    const int n = t.dimension();
    if (n == 1) return L.a[0];

    const BottTower fiber = vertical_subtower(t, 2, n);
    const Int eps_fiber =
        seshadri_at_recursive(fiber, restrict_to_stage(t, L, 2), x.tail(2), hyp);
    bool on_bottom_curve = true;  // x on the bottom filtration curve: z_2 = ... = z_n = 0
    for (int j = 2; j <= n && on_bottom_curve; ++j)
        if (!x.z(j).is_zero()) on_bottom_curve = false;
    if (on_bottom_curve) return L.a[0] < eps_fiber ? L.a[0] : eps_fiber;
    return eps_fiber;
}

}  // namespace detail

}  // namespace bott
