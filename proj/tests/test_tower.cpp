#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "bott/tower.hpp"
#include "test_support.hpp"

using bott::BottNumbers;
using bott::BottTower;
using bott::Int;
using bott::IntVec;
using bott::MaximalCone;
using bott::Wall;
using test_support::naive_determinant;
using test_support::random_any_numbers;
using test_support::random_positive_numbers;

TEST_CASE("Hirzebruch fan: rays from the Bott number") {
    BottNumbers numbers(2);
    numbers.set_c(1, 2, 3);
    const BottTower t = bott::build_tower(numbers);
    REQUIRE(t.dimension() == 2);
    REQUIRE(t.ray(1).v == IntVec{1, 0});
    REQUIRE(t.ray(2).v == IntVec{0, 1});
    REQUIRE(t.ray(3).v == IntVec{-1, 3});
    REQUIRE(t.ray(4).v == IntVec{0, -1});
    REQUIRE(t.maximal_cone_count() == 4);
}

TEST_CASE("height-1 tower is the line fan") {
    const BottTower t = bott::build_tower(BottNumbers(1));
    REQUIRE(t.rays().size() == 2);
    REQUIRE(t.ray(1).v == IntVec{1});
    REQUIRE(t.ray(2).v == IntVec{-1});
    REQUIRE(t.maximal_cone_count() == 2);
    REQUIRE(t.wall_count() == 1);
    const std::vector<Wall> walls = bott::enumerate_walls(t);
    REQUIRE(walls.size() == 1);
    REQUIRE(walls[0].ray_indices().empty());
    REQUIRE(walls[0].lower_cone().bits() == 0);
    REQUIRE(walls[0].upper_cone().bits() == 1);
}

TEST_CASE("height-3 all-ones tower: full combinatorics") {
    const BottTower t = bott::build_tower(BottNumbers::constant(3, 1));
    REQUIRE(t.rays().size() == 6);
    REQUIRE(t.maximal_cone_count() == 8);
    REQUIRE(bott::enumerate_walls(t).size() == 12);
    REQUIRE(t.wall_count() == 12);
    for (const MaximalCone& cone : t.maximal_cones()) {
        const Int d = naive_determinant(t.cone_matrix(cone));
        REQUIRE((d == 1 || d == -1));
        REQUIRE(d == bott::determinant(t.cone_matrix(cone)));
    }
}

TEST_CASE("maximal cones never pick both opposite rays") {
    const BottTower t = bott::build_tower(BottNumbers::constant(4, 2));
    for (const MaximalCone& cone : t.maximal_cones()) {
        const std::vector<int> idx = cone.ray_indices();
        const std::set<int> s(idx.begin(), idx.end());
        REQUIRE(s.size() == idx.size());
        for (int i = 1; i <= t.dimension(); ++i)
            REQUIRE((s.count(i) + s.count(t.dimension() + i)) == 1);
    }
}

TEST_CASE("wall enumeration: counts, uniqueness, adjacency") {
    std::mt19937_64 rng(421);
    for (int n = 1; n <= 6; ++n) {
        const BottTower t = bott::build_tower(random_positive_numbers(rng, n, 9));
        const std::vector<Wall> walls = bott::enumerate_walls(t);
        REQUIRE(walls.size() == (static_cast<std::size_t>(n) << (n - 1)));
        REQUIRE(walls.size() == t.wall_count());

        std::set<std::set<int>> ray_sets;
        for (const Wall& w : walls) {
            const std::vector<int> idx = w.ray_indices();
            ray_sets.insert(std::set<int>(idx.begin(), idx.end()));
            // the two adjacent cones differ exactly in the dropped slot
            REQUIRE((w.lower_cone().bits() ^ w.upper_cone().bits()) ==
                    (std::uint64_t{1} << (w.position() - 1)));
            REQUIRE_FALSE(w.lower_cone().upper(w.position()));
            REQUIRE(w.upper_cone().upper(w.position()));
        }
        REQUIRE(ray_sets.size() == walls.size());
    }
    REQUIRE(bott::build_tower(BottNumbers::constant(2, 1)).wall_count() == 4);
    REQUIRE(bott::build_tower(BottNumbers::constant(4, 1)).wall_count() == 32);
    REQUIRE(bott::enumerate_walls(bott::build_tower(BottNumbers::constant(4, 1))).size() == 32);
}

TEST_CASE("ray shape: -1 on the diagonal, Bott numbers above") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = static_cast<int>(1 + rng() % 6);
        const BottNumbers numbers = random_any_numbers(rng, n, 9);
        const BottTower t = bott::build_tower(numbers);
        for (int i = 1; i <= n; ++i) {
            for (int k = 1; k <= n; ++k) {
                const Int& entry = t.ray(n + i).v[static_cast<std::size_t>(k - 1)];
                if (k < i)
                    REQUIRE(entry == 0);
                else if (k == i)
                    REQUIRE(entry == -1);
                else
                    REQUIRE(entry == numbers.c(i, k));
            }
            REQUIRE(t.ray(i).v[static_cast<std::size_t>(i - 1)] == 1);
        }
    }
}

TEST_CASE("vertical subtowers") {
    std::mt19937_64 rng(99);
    const BottNumbers numbers = random_positive_numbers(rng, 4, 9);
    const BottTower t = bott::build_tower(numbers);

    SECTION("middle slice keeps the matching Bott numbers") {
        const BottTower s = bott::vertical_subtower(t, 2, 4);
        REQUIRE(s.dimension() == 3);
        REQUIRE(s.numbers().c(1, 2) == numbers.c(2, 3));
        REQUIRE(s.numbers().c(1, 3) == numbers.c(2, 4));
        REQUIRE(s.numbers().c(2, 3) == numbers.c(3, 4));
    }
    SECTION("j = i gives the line") {
        for (int j = 1; j <= 4; ++j) REQUIRE(bott::vertical_subtower(t, j, j).dimension() == 1);
    }
    SECTION("full range is the identity") {
        REQUIRE(bott::vertical_subtower(t, 1, 4) == t);
    }
    SECTION("slicing twice composes") {
        for (int trial = 0; trial < 30; ++trial) {
            const int n = static_cast<int>(2 + rng() % 5);
            const BottTower base = bott::build_tower(random_any_numbers(rng, n, 9));
            const int j = static_cast<int>(1 + rng() % n);
            const int i = static_cast<int>(j + rng() % (n - j + 1));
            const BottTower mid = bott::vertical_subtower(base, j, i);
            const int m = mid.dimension();
            const int j2 = static_cast<int>(1 + rng() % m);
            const int i2 = static_cast<int>(j2 + rng() % (m - j2 + 1));
            REQUIRE(bott::vertical_subtower(mid, j2, i2) ==
                    bott::vertical_subtower(base, j + j2 - 1, j + i2 - 1));
        }
    }
    SECTION("out-of-range slices are rejected") {
        REQUIRE_THROWS_AS(bott::vertical_subtower(t, 0, 2), bott::IndexOutOfRange);
        REQUIRE_THROWS_AS(bott::vertical_subtower(t, 3, 2), bott::IndexOutOfRange);
        REQUIRE_THROWS_AS(bott::vertical_subtower(t, 1, 5), bott::IndexOutOfRange);
    }
}

TEST_CASE("Bott numbers: shape validation and round trip") {
    REQUIRE_THROWS_AS(BottNumbers::from_rows({{Int(1)}, {Int(2)}}), bott::MalformedBottNumbers);
    REQUIRE_THROWS_AS(BottNumbers::from_rows({{Int(1), Int(2), Int(3)}}),
                      bott::MalformedBottNumbers);
    REQUIRE_THROWS_AS(BottNumbers(0), bott::MalformedBottNumbers);

    std::mt19937_64 rng(5);
    for (int n = 1; n <= 6; ++n) {
        const BottNumbers numbers = random_any_numbers(rng, n, 99);
        REQUIRE(BottNumbers::from_rows(numbers.rows()) == numbers);
    }
    REQUIRE_THROWS_AS(BottNumbers(3).c(2, 2), bott::IndexOutOfRange);
    REQUIRE_THROWS_AS(BottNumbers(3).c(1, 4), bott::IndexOutOfRange);
}

TEST_CASE("negative and zero Bott numbers still give a smooth fan") {
    BottNumbers numbers(3);
    numbers.set_c(1, 2, -4);
    numbers.set_c(1, 3, 0);
    numbers.set_c(2, 3, 7);
    const BottTower t = bott::build_tower(numbers);
    for (const MaximalCone& cone : t.maximal_cones()) {
        const Int d = bott::determinant(t.cone_matrix(cone));
        REQUIRE((d == 1 || d == -1));
    }
}

TEST_CASE("cone selector bounds") {
    const BottTower t = bott::build_tower(BottNumbers::constant(3, 1));
    REQUIRE_THROWS_AS(t.maximal_cone(8), bott::IndexOutOfRange);
    REQUIRE_THROWS_AS(MaximalCone(0, 0), bott::IndexOutOfRange);
    REQUIRE_THROWS_AS(t.maximal_cone(3).upper(4), bott::IndexOutOfRange);
    REQUIRE_THROWS_AS(t.ray(7), bott::IndexOutOfRange);
    REQUIRE_THROWS_AS(t.ray(0), bott::IndexOutOfRange);
}
