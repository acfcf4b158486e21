#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "astres/layout.hpp"
#include "helpers.hpp"

using namespace astres;

namespace {

TreeConfig with_divisors(std::vector<std::int64_t> xs) {
    TreeConfig cfg;
    cfg.divisors_x = std::move(xs);
    return cfg;
}

}  // namespace

TEST_CASE("level tables for the small reference shapes") {
    SUBCASE("X={2,2}") {
        LevelTable t(with_divisors({2, 2}));
        CHECK(t.level_count() == 3);
        CHECK(t.delta(1) == 1);
        CHECK(t.delta(2) == 3);
        CHECK(t.delta(3) == 7);
        CHECK(t.sigma(1) == 1);
        CHECK(t.sigma(2) == 2);
        CHECK(t.sigma(3) == 4);
        CHECK(t.slots_per_node(1) == 4);
        CHECK(t.slots_per_node(2) == 2);
        CHECK(t.slots_per_node(3) == 1);
    }
    SUBCASE("X={2,3}") {
        LevelTable t(with_divisors({2, 3}));
        CHECK(t.delta(1) == 1);
        CHECK(t.delta(2) == 3);
        CHECK(t.delta(3) == 9);
        CHECK(t.sigma(3) == 4);
        CHECK(t.leaf_count() == 6);
        CHECK(t.total_nodes() == 9);
    }
    SUBCASE("X={} root-only tree") {
        LevelTable t(with_divisors({}));
        CHECK(t.level_count() == 1);
        CHECK(t.delta(1) == 1);
        CHECK(t.sigma(1) == 1);
        CHECK(t.leaf_count() == 1);
        CHECK(t.slots_per_node(1) == 1);
    }
}

TEST_CASE("child indexes") {
    SUBCASE("X={2,2} level 2 node 2") {
        LevelTable t(with_divisors({2, 2}));
        CHECK(t.child_index(2, 2, 0) == 4);
        CHECK(t.child_index(2, 2, 1) == 5);
    }
    SUBCASE("X={2,3} level 2 node 3 fills the array tail") {
        LevelTable t(with_divisors({2, 3}));
        CHECK(t.child_index(2, 3, 0) == 7);
        CHECK(t.child_index(2, 3, 1) == 8);
        CHECK(t.child_index(2, 3, 2) == 9);
    }
    SUBCASE("range errors") {
        LevelTable t(with_divisors({2, 2}));
        CHECK_THROWS_AS(t.child_index(3, 4, 0), std::out_of_range);  // leaf
        CHECK_THROWS_AS(t.child_index(2, 2, 2), std::out_of_range);
        CHECK_THROWS_AS(t.child_index(2, 4, 0), std::out_of_range);
        CHECK_THROWS_AS(t.child_index(0, 1, 0), std::out_of_range);
    }
}

TEST_CASE("node intervals") {
    LevelTable t(with_divisors({2, 2}));
    CHECK(t.node_interval(1, 1) == Interval{0, 4});
    CHECK(t.node_interval(2, 3) == Interval{2, 4});  // second node on level 2
    CHECK(t.node_interval(3, 5) == Interval{1, 2});
    CHECK_THROWS_AS(t.node_interval(2, 4), std::out_of_range);
}

TEST_CASE("level_of inverts the flat layout") {
    LevelTable t(with_divisors({2, 3}));
    CHECK(t.level_of(1) == 1);
    CHECK(t.level_of(2) == 2);
    CHECK(t.level_of(3) == 2);
    CHECK(t.level_of(4) == 3);
    CHECK(t.level_of(9) == 3);
    CHECK_THROWS_AS(t.level_of(0), std::out_of_range);
    CHECK_THROWS_AS(t.level_of(10), std::out_of_range);
}

TEST_CASE("children partition each level with no gaps or repeats") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const TreeConfig cfg = astres::testing::random_config(rng);
        LevelTable t(cfg);
        for (std::int64_t l = 1; l < t.level_count(); ++l) {
            std::set<std::int64_t> seen;
            for (std::int64_t j = t.sigma(l); j < t.sigma(l) + t.nodes_on_level(l);
                 ++j) {
                Interval parent = t.node_interval(l, j);
                SlotIndex cursor = parent.start;
                for (std::int64_t c = 0; c < t.branching(l); ++c) {
                    const std::int64_t child = t.child_index(l, j, c);
                    REQUIRE(seen.insert(child).second);
                    const Interval iv = t.node_interval(l + 1, child);
                    REQUIRE(iv.start == cursor);  // contiguous, disjoint
                    cursor = iv.end;
                }
                REQUIRE(cursor == parent.end);
            }
            // exactly the next level's index range, nothing else
            REQUIRE(static_cast<std::int64_t>(seen.size()) ==
                    t.nodes_on_level(l + 1));
            REQUIRE(*seen.begin() == t.sigma(l + 1));
            REQUIRE(*seen.rbegin() == t.delta(l + 1));
        }
        // every level spans the whole universe
        for (std::int64_t l = 1; l <= t.level_count(); ++l) {
            CHECK(t.node_interval(l, t.sigma(l)).start == 0);
            CHECK(t.node_interval(l, t.sigma(l) + t.nodes_on_level(l) - 1).end ==
                  t.leaf_count());
        }
    }
}

TEST_CASE("flat index range is exactly 1..delta(L)") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        LevelTable t(astres::testing::random_config(rng));
        std::int64_t counted = 0;
        for (std::int64_t l = 1; l <= t.level_count(); ++l)
            counted += t.nodes_on_level(l);
        CHECK(counted == t.total_nodes());
        CHECK(t.sigma(t.level_count()) + t.nodes_on_level(t.level_count()) - 1 ==
              t.total_nodes());
    }
}
