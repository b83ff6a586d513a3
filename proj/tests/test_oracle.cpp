#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "bott/oracle.hpp"
#include "test_support.hpp"

using bott::BottNumbers;
using bott::BottTower;
using bott::CrossCheckReport;
using bott::DivisorClass;
using bott::Int;
using bott::IntVec;
using test_support::random_nef_class;
using test_support::random_positive_numbers;

TEST_CASE("all-lower fixed point sees the minimum coefficient") {
    const BottTower t = bott::build_tower(BottNumbers::constant(4, 3));
    const DivisorClass L{1, 3, 8, 4};
    REQUIRE(bott::fixed_point_seshadri(t, L, t.maximal_cone(0)) == 1);

    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = static_cast<int>(1 + rng() % 5);
        const BottTower tt = bott::build_tower(random_positive_numbers(rng, n, 9));
        const DivisorClass LL = random_nef_class(rng, n, 99);
        Int lo = LL.a.front();
        for (const Int& a : LL.a)
            if (a < lo) lo = a;
        REQUIRE(bott::fixed_point_seshadri(tt, LL, tt.maximal_cone(0)) == lo);
        REQUIRE(bott::fixed_point_seshadri(tt, LL, tt.maximal_cone(0)) ==
                bott::seshadri_inf(tt, LL).value);
    }
}

TEST_CASE("line fan: both fixed points give the degree") {
    const BottTower line = bott::build_tower(BottNumbers(1));
    const DivisorClass L{6};
    REQUIRE(bott::fixed_point_seshadri(line, L, line.maximal_cone(0)) == 6);
    REQUIRE(bott::fixed_point_seshadri(line, L, line.maximal_cone(1)) == 6);
}

TEST_CASE("Hirzebruch wall pairings, fully enumerated") {
    BottNumbers numbers(2);
    numbers.set_c(1, 2, 3);
    const BottTower t = bott::build_tower(numbers);
    const DivisorClass L{5, 2};

    std::vector<Int> pairings;
    for (const bott::Wall& w : bott::enumerate_walls(t))
        pairings.push_back(bott::pair(L, bott::invariant_curve_class(t, w)));
    // enumeration order: walls spanned by v_2, v_1, v_3, v_4;
    // classes (1,0), (0,1), (0,1), (1,c) with c = 3
    REQUIRE(pairings == std::vector<Int>{5, 2, 2, 11});

    Int lo = 2;
    for (const Int& p : pairings) REQUIRE(p >= lo);
}

TEST_CASE("oracle equals formula at every fixed point") {
    BottNumbers numbers(3);
    numbers.set_c(1, 2, 1);
    numbers.set_c(1, 3, 1);
    numbers.set_c(2, 3, 1);
    const BottTower t = bott::build_tower(numbers);
    const DivisorClass L{2, 1, 3};
    for (const bott::MaximalCone& cone : t.maximal_cones()) {
        const Int oracle = bott::fixed_point_seshadri(t, L, cone);
        const Int formula = bott::seshadri_at(t, L, bott::fixed_point_of_cone(t, cone)).value;
        REQUIRE(oracle == formula);
    }
}

TEST_CASE("cross-check report covers all fixed points") {
    const BottTower t = bott::build_tower(BottNumbers::constant(4, 1));
    CrossCheckReport report;
    REQUIRE_NOTHROW(report = bott::cross_check_fixed_points(t, DivisorClass{1, 3, 8, 4}));
    REQUIRE(report.checks.size() == 16);
    REQUIRE(report.all_match);
    for (const bott::FixedPointCheck& c : report.checks) {
        REQUIRE(c.match);
        REQUIRE(c.oracle_value == c.formula_value);
        REQUIRE(c.walls.size() == 4);
    }
    REQUIRE_NOTHROW(bott::cross_check_fixed_points(t, DivisorClass{3, 6, 2, 7}));
}

TEST_CASE("oracle hypotheses are enforced") {
    const BottTower t = bott::build_tower(BottNumbers::constant(2, 1));
    REQUIRE_THROWS_AS(bott::fixed_point_seshadri(t, DivisorClass{-1, 1}, t.maximal_cone(0)),
                      bott::NotNef);
    REQUIRE_THROWS_AS(bott::cross_check_fixed_points(t, DivisorClass{-1, 1}), bott::NotNef);

    BottNumbers flat(2);
    flat.set_c(1, 2, 0);
    const BottTower product = bott::build_tower(flat);
    REQUIRE_THROWS_AS(bott::fixed_point_seshadri(product, DivisorClass{1, 1},
                                                 product.maximal_cone(0)),
                      bott::NonPositiveBottNumbers);
}

TEST_CASE("wall lower bound report") {
    SECTION("constant bundles meet every wall at least at the constant") {
        const BottTower t = bott::build_tower(BottNumbers::constant(3, 2));
        const auto report = bott::nef_lower_bound_check(t, DivisorClass{4, 4, 4});
        REQUIRE(report.ok);
        REQUIRE(report.lower_bound == 4);
        REQUIRE(report.walls.size() == t.wall_count());
        for (const bott::WallPairing& wp : report.walls) REQUIRE(wp.pairing >= 4);
    }
    SECTION("random nef bundles") {
        std::mt19937_64 rng(71);
        for (int trial = 0; trial < 20; ++trial) {
            const int n = static_cast<int>(1 + rng() % 5);
            const BottTower t = bott::build_tower(random_positive_numbers(rng, n, 9));
            const auto report = bott::nef_lower_bound_check(t, random_nef_class(rng, n, 99));
            REQUIRE(report.ok);
            REQUIRE(report.walls.size() == t.wall_count());
        }
    }
    SECTION("a non-nef class can violate the bound") {
        BottNumbers numbers(2);
        numbers.set_c(1, 2, 2);
        const BottTower t = bott::build_tower(numbers);
        // min coefficient is -1 but the section wall pairs to 0 + 2*(-1) = -2
        try {
            bott::nef_lower_bound_check(t, DivisorClass{0, -1});
            FAIL("expected BoundViolated");
        } catch (const bott::BoundViolated& e) {
            REQUIRE(e.pairing() == -2);
            REQUIRE(e.wall().position() == 1);
            REQUIRE(e.wall().ray_indices() == std::vector<int>{4});
        }
    }
}

TEST_CASE("randomized campaign is clean and reproducible") {
    bott::CampaignOptions opts;
    opts.max_dimension = 5;
    opts.trials = 100;
    opts.seed = 90210;
    const auto report = bott::run_verification_campaign(opts);
    REQUIRE(report.ok);
    REQUIRE(report.failures.empty());
    REQUIRE(report.instances == 100);
    REQUIRE(report.fixed_points_checked > 0);
    REQUIRE(report.walls_checked > 0);

    const auto again = bott::run_verification_campaign(opts);
    REQUIRE(again.fixed_points_checked == report.fixed_points_checked);
    REQUIRE(again.walls_checked == report.walls_checked);

    REQUIRE_THROWS_AS(bott::run_verification_campaign(bott::CampaignOptions{0, 1, 1, 1, 1}),
                      bott::IndexOutOfRange);
}
