#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bott/curve.hpp"
#include "bott/divisor.hpp"
#include "bott/errors.hpp"
#include "bott/integers.hpp"
#include "bott/point.hpp"
#include "bott/seshadri.hpp"
#include "bott/tower.hpp"

// Independent verification layer. At a torus-fixed point the Seshadri
// constant of a nef line bundle is the minimum of L . C over the invariant
// curves C through the point (all smooth, multiplicity 1), i.e. over the
// walls of the corresponding maximal cone. This route goes through wall
// relations and intersection numbers only and never touches the stratum
// formula, so agreement at all 2^n fixed points is a genuine cross-check.

namespace bott {

struct WallPairing {
    Wall wall;
    CurveClass curve;
    Int pairing;
};

inline std::vector<WallPairing> wall_pairings_of_cone(const BottTower& t, const DivisorClass& L,
                                                      const MaximalCone& cone) {
    detail::require_class_length(t, L);
    std::vector<WallPairing> out;
    out.reserve(static_cast<std::size_t>(t.dimension()));
    for (const Wall& w : walls_of_cone(t, cone)) {
        CurveClass c = invariant_curve_class(t, w);
        Int p = pair(L, c);
        out.push_back(WallPairing{w, std::move(c), std::move(p)});
    }
    return out;
}

// min over the n invariant curves through the fixed point of the cone.
inline Int fixed_point_seshadri(const BottTower& t, const DivisorClass& L,
                                const MaximalCone& cone) {
    detail::require_positive_bott_numbers(t, "fixed_point_seshadri");
    if (!is_nef(t, L)) throw NotNef("fixed-point oracle needs a nef class");
    const std::vector<WallPairing> pairings = wall_pairings_of_cone(t, L, cone);
    Int best = pairings.front().pairing;
    for (const WallPairing& wp : pairings)
        if (wp.pairing < best) best = wp.pairing;
    return best;
}

struct FixedPointCheck {
    MaximalCone cone;
    CoxPoint point;
    Int oracle_value;
    Int formula_value;
    bool match = false;
    std::vector<WallPairing> walls;  // the invariant curves through the point
};

struct CrossCheckReport {
    std::vector<FixedPointCheck> checks;
    bool all_match = true;
};

class DiscrepancyFound : public Error {
public:
    DiscrepancyFound(MaximalCone cone, CrossCheckReport report)
        : Error("DiscrepancyFound",
                "oracle and formula disagree at the fixed point of cone " +
                    std::to_string(cone.bits())),
          cone_(std::move(cone)),
          report_(std::move(report)) {}

    const MaximalCone& cone() const noexcept { return cone_; }
    const CrossCheckReport& report() const noexcept { return report_; }

private:
    MaximalCone cone_;
    CrossCheckReport report_;
};

// Confronts the oracle with the formula at every fixed point. Returns the
// full per-cone report; a mismatch raises DiscrepancyFound carrying the
// offending cone together with the report (including its wall data).
inline CrossCheckReport cross_check_fixed_points(const BottTower& t, const DivisorClass& L) {
    detail::require_positive_bott_numbers(t, "cross_check_fixed_points");
    if (!is_nef(t, L)) throw NotNef("fixed-point cross-check needs a nef class");

    CrossCheckReport report;
    report.checks.reserve(static_cast<std::size_t>(t.maximal_cone_count()));
    for (std::uint64_t b = 0; b < t.maximal_cone_count(); ++b) {
        MaximalCone cone = t.maximal_cone(b);
        std::vector<WallPairing> walls = wall_pairings_of_cone(t, L, cone);
        Int oracle = walls.front().pairing;
        for (const WallPairing& wp : walls)
            if (wp.pairing < oracle) oracle = wp.pairing;
        CoxPoint x = fixed_point_of_cone(t, cone);
        Int formula = seshadri_at(t, L, x).value;
        const bool match = oracle == formula;
        report.checks.push_back(FixedPointCheck{std::move(cone), std::move(x), std::move(oracle),
                                                std::move(formula), match, std::move(walls)});
        if (!match) report.all_match = false;
    }
    if (!report.all_match) {
        for (const FixedPointCheck& c : report.checks)
            if (!c.match) throw DiscrepancyFound(c.cone, report);
    }
    return report;
}

struct WallBoundReport {
    Int lower_bound;  // min_i a_i
    std::vector<WallPairing> walls;
    bool ok = true;
};

class BoundViolated : public Error {
public:
    BoundViolated(Wall wall, Int pairing, Int bound)
        : Error("BoundViolated", "wall pairing " + pairing.str() + " below the bound " +
                                     bound.str()),
          wall_(std::move(wall)),
          pairing_(std::move(pairing)) {}

    const Wall& wall() const noexcept { return wall_; }
    const Int& pairing() const noexcept { return pairing_; }

private:
    Wall wall_;
    Int pairing_;
};

// Every invariant curve of the fan meets L in at least min_i a_i. Checked
// over all walls, not only those through a fixed point. No nef pre-check:
// feeding a non-nef class is how a violation can actually be produced.
inline WallBoundReport nef_lower_bound_check(const BottTower& t, const DivisorClass& L) {
    detail::require_class_length(t, L);
    WallBoundReport report;
    report.lower_bound = L.a.front();
    for (const Int& a : L.a)
        if (a < report.lower_bound) report.lower_bound = a;

    for (const Wall& w : enumerate_walls(t)) {
        CurveClass c = invariant_curve_class(t, w);
        Int p = pair(L, c);
        const bool bad = p < report.lower_bound;
        report.walls.push_back(WallPairing{w, std::move(c), std::move(p)});
        if (bad) {
            report.ok = false;
            throw BoundViolated(w, report.walls.back().pairing, report.lower_bound);
        }
    }
    return report;
}

// Reproducible randomized campaign: random towers (positive Bott numbers)
// and random nef classes, cross-checked at every fixed point and against the
// wall bound. Draws come from a seeded mt19937_64 so a report names the seed
// that reproduces it.
struct CampaignOptions {
    int max_dimension = 4;
    int trials = 100;
    std::uint64_t seed = 1729;
    std::uint64_t max_bott = 9;    // Bott numbers in 1..max_bott
    std::uint64_t max_coeff = 99;  // class coefficients in 0..max_coeff
};

struct CampaignFailure {
    int trial = 0;
    std::string code;
    std::string message;
};

struct CampaignReport {
    CampaignOptions options;
    int instances = 0;
    std::uint64_t fixed_points_checked = 0;
    std::uint64_t walls_checked = 0;
    std::vector<CampaignFailure> failures;
    bool ok = true;
};

inline CampaignReport run_verification_campaign(const CampaignOptions& opts) {
    if (opts.max_dimension < 1 || opts.max_dimension > 20)
        throw IndexOutOfRange("campaign dimension cap " + std::to_string(opts.max_dimension));
    if (opts.trials < 1) throw IndexOutOfRange("campaign needs at least one trial");
    if (opts.max_bott < 1) throw IndexOutOfRange("campaign Bott number cap must be >= 1");

    std::mt19937_64 rng(opts.seed);
    CampaignReport report;
    report.options = opts;
    for (int trial = 0; trial < opts.trials; ++trial) {
        const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(opts.max_dimension));
        BottNumbers numbers(n);
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j)
                numbers.set_c(i, j, Int(1 + rng() % opts.max_bott));
        const BottTower t = build_tower(std::move(numbers));
        DivisorClass L;
        L.a.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) L.a.emplace_back(rng() % (opts.max_coeff + 1));

        try {
            const CrossCheckReport cross = cross_check_fixed_points(t, L);
            report.fixed_points_checked += cross.checks.size();
            const WallBoundReport bound = nef_lower_bound_check(t, L);
            report.walls_checked += bound.walls.size();
        } catch (const Error& e) {
            report.ok = false;
            report.failures.push_back(CampaignFailure{trial, e.code(), e.what()});
        }
        ++report.instances;
    }
    return report;
}

}  // namespace bott
