#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "astres/oracle.hpp"
#include "helpers.hpp"

using namespace astres;

TEST_CASE("fresh oracle reports zero everywhere") {
    SlotOracle oracle(8);
    CHECK(oracle.max_reserved({0, 8}) == 0);
    CHECK(oracle.max_reserved({3, 4}) == 0);
    CHECK(oracle.outstanding() == 0);
}

TEST_CASE("loads accumulate per slot") {
    SlotOracle oracle(4);
    oracle.insert({{0, 2}, 3});
    oracle.insert({{1, 3}, 4});
    const std::vector<Bandwidth> want{3, 7, 4, 0};
    CHECK(std::vector<Bandwidth>(oracle.loads().begin(),
                                 oracle.loads().end()) == want);
    CHECK(oracle.max_reserved({0, 3}) == 7);
    CHECK(oracle.max_reserved({2, 4}) == 4);
    CHECK(oracle.max_reserved({3, 4}) == 0);
}

TEST_CASE("remove replays a ledger entry") {
    SlotOracle oracle(4);
    oracle.insert({{0, 3}, 2});
    oracle.remove({{0, 3}, 2});
    CHECK(oracle.max_reserved({0, 4}) == 0);
    CHECK(oracle.outstanding() == 0);
    CHECK_THROWS_AS(oracle.remove({{0, 3}, 2}), std::logic_error);
    CHECK_THROWS_AS(oracle.remove({{1, 2}, 9}), std::logic_error);
}

TEST_CASE("interval validation") {
    SlotOracle oracle(4);
    CHECK_THROWS_AS(oracle.max_reserved({2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(oracle.max_reserved({0, 5}), std::out_of_range);
    CHECK_THROWS_AS(oracle.insert({{-1, 2}, 1}), std::out_of_range);
    CHECK_THROWS_AS(oracle.insert({{0, 1}, 0}), std::invalid_argument);
}

TEST_CASE("admission predicate and boundary equality") {
    SlotOracle oracle(4);
    CHECK(oracle.would_admit({{0, 4}, 10}, 10));
    oracle.insert({{1, 2}, 5});
    CHECK_FALSE(oracle.would_admit({{0, 4}, 6}, 10));
    CHECK(oracle.would_admit({{2, 4}, 6}, 10));
}

TEST_CASE("incremental loads match a ledger recomputation") {
    std::mt19937_64 rng(7);
    SlotOracle oracle(64);
    std::vector<Reservation> live;
    for (int i = 0; i < 500; ++i) {
        if (!live.empty() && astres::testing::uniform(rng, 0, 3) == 0) {
            const auto pick = static_cast<std::size_t>(astres::testing::uniform(
                rng, 0, static_cast<std::int64_t>(live.size()) - 1));
            oracle.remove(live[pick]);
            live[pick] = live.back();
            live.pop_back();
        } else {
            const Reservation r{astres::testing::random_interval(rng, 64),
                                astres::testing::uniform(rng, 1, 50)};
            oracle.insert(r);
            live.push_back(r);
        }
        REQUIRE(oracle.consistent());
    }
    CHECK(oracle.outstanding() == live.size());
}
