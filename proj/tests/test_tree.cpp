#include <doctest.h>

#include <limits>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "astres/oracle.hpp"
#include "astres/tree.hpp"
#include "helpers.hpp"

using namespace astres;
using astres::testing::path_sum;
using astres::testing::random_interval;
using astres::testing::snapshot;
using astres::testing::uniform;

namespace {

Tree small_tree() {
    TreeConfig cfg;
    cfg.divisors_x = {2, 2};
    return Tree(cfg);
}

}  // namespace

TEST_CASE("build") {
    SUBCASE("shipped month preset: 9216 five-minute slots over 32 days") {
        const auto cfg = preset("paper-month-5min");
        REQUIRE(cfg.has_value());
        Tree tree(*cfg);
        CHECK(tree.slot_count() == 9216);
        CHECK(cfg->universe_span() == 32 * 86400);
        CHECK(tree.layout().level_count() == 13);
    }
    SUBCASE("empty divisor set is a single leaf over [0,1)") {
        Tree tree(TreeConfig{});
        CHECK(tree.slot_count() == 1);
        CHECK(tree.records().size() == 2);  // dummy slot 0 plus the root
        tree.insert({{0, 1}, 7});
        CHECK(tree.max_reserved({0, 1}) == 7);
    }
    SUBCASE("X={2,3}") {
        TreeConfig cfg;
        cfg.divisors_x = {2, 3};
        Tree tree(cfg);
        CHECK(tree.slot_count() == 6);
        CHECK(tree.layout().total_nodes() == 9);
    }
    SUBCASE("two-level tree from a prime leaf count") {
        TreeConfig cfg;
        cfg.divisors_x = {7};
        Tree tree(cfg);
        CHECK(tree.slot_count() == 7);
        tree.insert({{2, 5}, 3});
        CHECK(tree.max_reserved({0, 7}) == 3);
        CHECK(tree.max_reserved({5, 7}) == 0);
    }
    SUBCASE("fresh records are all zero") {
        Tree tree = small_tree();
        for (const NodeRecord& rec : tree.records()) CHECK(rec == NodeRecord{});
    }
    SUBCASE("building is deterministic") {
        const auto cfg = *preset("paper-month-5min");
        Tree a(cfg);
        Tree b(cfg);
        CHECK(snapshot(a) == snapshot(b));
        CHECK(a.config() == b.config());
    }
    SUBCASE("rejects divisors below 2") {
        TreeConfig cfg;
        cfg.divisors_x = {2, 1};
        CHECK_THROWS_AS(Tree{cfg}, std::invalid_argument);
        cfg.divisors_x = {0};
        CHECK_THROWS_AS(Tree{cfg}, std::invalid_argument);
    }
    SUBCASE("rejects node counts that overflow") {
        TreeConfig cfg;
        cfg.divisors_x.assign(64, 1000000);
        CHECK_THROWS_AS(Tree{cfg}, std::overflow_error);
    }
}

TEST_CASE("slot_of maps timestamps to slots") {
    TreeConfig cfg;
    cfg.divisors_x = {2, 2};
    cfg.granularity_g = 300;
    cfg.origin_s_m = 1000;
    CHECK(slot_of(cfg, 1000) == 0);
    CHECK(slot_of(cfg, 1300) == 1);
    CHECK(slot_of(cfg, 1000 + 4 * 300 - 1) == 3);  // last slot
    CHECK_THROWS_AS(slot_of(cfg, 999), std::out_of_range);
    CHECK_THROWS_AS(slot_of(cfg, 1000 + 4 * 300), std::out_of_range);
}

TEST_CASE("insert places nv and mv exactly") {
    Tree tree = small_tree();
    tree.insert({{0, 3}, 2});
    // node 2 = [0,2), node 6 = leaf [2,3); mv repairs on node 3 and the root
    CHECK(tree.record(2) == NodeRecord{2, 0});
    CHECK(tree.record(6) == NodeRecord{2, 0});
    CHECK(tree.record(3) == NodeRecord{0, 2});
    CHECK(tree.record(1) == NodeRecord{0, 2});
    CHECK(tree.record(4) == NodeRecord{});
    CHECK(tree.record(5) == NodeRecord{});
    CHECK(tree.record(7) == NodeRecord{});
}

TEST_CASE("full-span insert lands on the root alone") {
    Tree tree = small_tree();
    tree.insert({{0, 4}, 9});
    CHECK(tree.record(1) == NodeRecord{9, 0});
    for (std::int64_t j = 2; j <= 7; ++j) CHECK(tree.record(j) == NodeRecord{});
    CHECK(tree.touched_nodes() == 0);  // never divided
}

TEST_CASE("insert validation") {
    Tree tree = small_tree();
    CHECK_THROWS_AS(tree.insert({{1, 1}, 2}), std::invalid_argument);
    CHECK_THROWS_AS(tree.insert({{0, 5}, 2}), std::out_of_range);
    CHECK_THROWS_AS(tree.insert({{-1, 2}, 2}), std::out_of_range);
    CHECK_THROWS_AS(tree.insert({{3, 1}, 2}), std::out_of_range);
    CHECK_THROWS_AS(tree.insert({{0, 2}, 0}), std::invalid_argument);
    CHECK_THROWS_AS(tree.insert({{0, 2}, -4}), std::invalid_argument);
}

TEST_CASE("bandwidth arithmetic is checked, never wrapped") {
    Tree tree = small_tree();
    const Bandwidth huge = std::numeric_limits<Bandwidth>::max();
    tree.insert({{0, 4}, huge});
    CHECK_THROWS_AS(tree.insert({{0, 4}, 1}), std::overflow_error);
}

TEST_CASE("max_reserved over a hand-checked load profile") {
    Tree tree = small_tree();
    tree.insert({{0, 2}, 3});
    tree.insert({{1, 3}, 4});
    // slot loads are 3,7,4,0
    CHECK(tree.max_reserved({0, 3}) == 7);
    CHECK(tree.max_reserved({2, 4}) == 4);
    CHECK(tree.max_reserved({3, 4}) == 0);
    CHECK(tree.max_reserved({0, 1}) == 3);
    for (SlotIndex t = 0; t < 4; ++t)
        CHECK(path_sum(tree, t) == std::vector<Bandwidth>{3, 7, 4, 0}[t]);
}

TEST_CASE("fresh tree answers zero for any query") {
    Tree tree = small_tree();
    CHECK(tree.max_reserved({0, 4}) == 0);
    CHECK(tree.max_reserved({1, 2}) == 0);
    CHECK_THROWS_AS(tree.max_reserved({2, 2}), std::invalid_argument);
}

TEST_CASE("max_reserved mutates nothing") {
    Tree tree = small_tree();
    tree.insert({{0, 3}, 2});
    tree.insert({{1, 4}, 5});
    const auto before = snapshot(tree);
    (void)tree.max_reserved({0, 4});
    (void)tree.max_reserved({1, 3});
    (void)tree.max_reserved({3, 4});
    CHECK(snapshot(tree) == before);
}

TEST_CASE("delete is insert negated") {
    SUBCASE("insert then delete restores the array bit-exactly") {
        Tree tree = small_tree();
        const auto fresh = snapshot(tree);
        tree.insert({{0, 3}, 2});
        tree.remove({{0, 3}, 2});
        CHECK(snapshot(tree) == fresh);
    }
    SUBCASE("deleting something never inserted is permitted") {
        Tree tree = small_tree();
        tree.remove({{0, 1}, 5});
        CHECK(path_sum(tree, 0) == -5);
        CHECK(tree.max_reserved({0, 1}) == -5);
        CHECK_FALSE(tree.audit().has_value());  // mv equation still holds
    }
    SUBCASE("random sequence replayed with its inverse suffix") {
        std::mt19937_64 rng(3);
        TreeConfig cfg;
        cfg.divisors_x = {2, 3, 2, 2};  // n = 24
        Tree tree(cfg);
        const auto fresh = snapshot(tree);
        std::vector<Reservation> applied;
        for (int i = 0; i < 300; ++i) {
            const Reservation r{random_interval(rng, tree.slot_count()),
                                uniform(rng, 1, 40)};
            tree.insert(r);
            applied.push_back(r);
        }
        for (auto it = applied.rbegin(); it != applied.rend(); ++it)
            tree.remove(*it);
        CHECK(snapshot(tree) == fresh);
    }
}

TEST_CASE("audit") {
    SUBCASE("fresh tree passes") {
        CHECK_FALSE(small_tree().audit().has_value());
    }
    SUBCASE("poked leaf mv is reported at its own index") {
        Tree tree = small_tree();
        tree.poke_record(6, NodeRecord{0, 1});
        const auto v = tree.audit();
        REQUIRE(v.has_value());
        CHECK(v->node == 6);
        CHECK(v->expected_mv == 0);
        CHECK(v->actual_mv == 1);
        tree.poke_record(6, NodeRecord{0, 0});
        CHECK_FALSE(tree.audit().has_value());
    }
    SUBCASE("poked internal mv is reported at the fault site") {
        Tree tree = small_tree();
        tree.insert({{0, 3}, 2});
        tree.poke_record(3, NodeRecord{0, 99});
        const auto v = tree.audit();
        REQUIRE(v.has_value());
        CHECK(v->node == 3);
        CHECK(v->expected_mv == 2);
        CHECK(v->actual_mv == 99);
    }
}

TEST_CASE("differential loads against the slot oracle with audits") {
    std::mt19937_64 rng(17);
    TreeConfig cfg;
    cfg.divisors_x = {3, 2, 2, 3};  // n = 36, mixed branching
    Tree tree(cfg);
    SlotOracle oracle(tree.slot_count());
    std::vector<Reservation> live;
    for (int i = 0; i < 2000; ++i) {
        const int kind = static_cast<int>(uniform(rng, 0, 3));
        if (kind == 0 && !live.empty()) {
            const auto pick = static_cast<std::size_t>(
                uniform(rng, 0, static_cast<std::int64_t>(live.size()) - 1));
            tree.remove(live[pick]);
            oracle.remove(live[pick]);
            live[pick] = live.back();
            live.pop_back();
        } else if (kind <= 1) {
            const Reservation r{random_interval(rng, tree.slot_count()),
                                uniform(rng, 1, 30)};
            tree.insert(r);
            oracle.insert(r);
            live.push_back(r);
        } else {
            const Interval q = random_interval(rng, tree.slot_count());
            REQUIRE(tree.max_reserved(q) == oracle.max_reserved(q));
        }
        REQUIRE_FALSE(tree.audit().has_value());
    }
    // path sums equal per-slot loads
    for (SlotIndex t = 0; t < tree.slot_count(); ++t)
        REQUIRE(path_sum(tree, t) == oracle.loads()[static_cast<std::size_t>(t)]);
}

TEST_CASE("traversal counts stay within the binary bound") {
    TreeConfig cfg;
    cfg.divisors_x.assign(10, 2);  // n = 1024, lg n = 10
    Tree tree(cfg);

    SUBCASE("worst-case straddle touches 2*lg(n) - 1 nodes") {
        tree.insert({{1, 1023}, 5});
        CHECK(tree.touched_nodes() == 19);
        (void)tree.max_reserved({1, 1023});
        CHECK(tree.touched_nodes() == 19);
    }
    SUBCASE("random operations never exceed 4*lg(n) - 7") {
        std::mt19937_64 rng(23);
        std::int64_t worst = 0;
        for (int i = 0; i < 4000; ++i) {
            const Interval iv = random_interval(rng, 1024);
            if (uniform(rng, 0, 1) == 0)
                tree.insert({iv, uniform(rng, 1, 9)});
            else
                (void)tree.max_reserved(iv);
            worst = std::max(worst, tree.touched_nodes());
        }
        CHECK(worst <= 4 * 10 - 7);
        CHECK(worst == 19);  // the straddle shape appears at this sample size
    }
}

TEST_CASE("version counter moves on every mutation") {
    Tree tree = small_tree();
    const auto v0 = tree.version();
    tree.insert({{0, 2}, 1});
    CHECK(tree.version() > v0);
    (void)tree.max_reserved({0, 4});
    const auto v1 = tree.version();
    tree.remove({{0, 2}, 1});
    CHECK(tree.version() > v1);
    const auto v2 = tree.version();
    tree.poke_record(1, tree.record(1));
    CHECK(tree.version() > v2);
}

TEST_CASE("concurrent readers see consistent answers") {
    TreeConfig cfg;
    cfg.divisors_x = {2, 2, 2, 2, 2};
    Tree tree(cfg);
    tree.insert({{3, 17}, 4});
    tree.insert({{10, 30}, 2});
    const Bandwidth expect = tree.max_reserved({0, 32});
    std::vector<std::thread> readers;
    std::vector<Bandwidth> got(4, -1);
    for (int i = 0; i < 4; ++i)
        readers.emplace_back([&tree, &got, i] {
            for (int k = 0; k < 1000; ++k) got[static_cast<std::size_t>(i)] =
                tree.max_reserved({0, 32});
        });
    for (auto& th : readers) th.join();
    for (const Bandwidth b : got) CHECK(b == expect);
}

TEST_CASE("reset_root_subtree zeroes one half and repairs the root") {
    TreeConfig cfg;
    cfg.divisors_x = {2, 2, 2};  // n = 8
    Tree tree(cfg);
    tree.insert({{0, 3}, 4});   // lands in the left half
    tree.insert({{5, 8}, 6});   // right half
    tree.reset_root_subtree(0);
    CHECK(tree.max_reserved({0, 4}) == 0);
    CHECK(tree.max_reserved({5, 8}) == 6);
    CHECK_FALSE(tree.audit().has_value());
    // left subtree records are all zero
    const LevelTable& t = tree.layout();
    for (std::int64_t l = 2; l <= t.level_count(); ++l) {
        const std::int64_t per = t.nodes_on_level(l) / 2;
        for (std::int64_t j = t.sigma(l); j < t.sigma(l) + per; ++j)
            CHECK(tree.record(j) == NodeRecord{});
    }
    CHECK_THROWS_AS(tree.reset_root_subtree(2), std::out_of_range);
    CHECK_THROWS_AS(tree.reset_root_subtree(-1), std::out_of_range);
}
