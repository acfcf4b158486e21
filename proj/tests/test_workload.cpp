#include <doctest.h>

#include <set>
#include <stdexcept>
#include <tuple>

#include "astres/workload.hpp"

using namespace astres;

TEST_CASE("same seed yields the identical sequence") {
    WorkloadSpec spec;
    spec.seed = 99;
    spec.op_count = 5000;
    const auto a = generate(spec, 512);
    const auto b = generate(spec, 512);
    CHECK(a == b);
    spec.seed = 100;
    CHECK(generate(spec, 512) != a);
}

TEST_CASE("zero delete fraction produces no deletes") {
    WorkloadSpec spec;
    spec.insert_fraction = 0.6;
    spec.delete_fraction = 0.0;
    spec.query_fraction = 0.4;
    spec.op_count = 2000;
    for (const Op& op : generate(spec, 64))
        CHECK(op.kind != Op::Kind::remove);
}

TEST_CASE("every delete replays an outstanding insert") {
    WorkloadSpec spec;
    spec.op_count = 20000;
    spec.delete_fraction = 0.3;
    spec.insert_fraction = 0.4;
    spec.query_fraction = 0.3;
    std::multiset<std::tuple<SlotIndex, SlotIndex, Bandwidth>> ledger;
    for (const Op& op : generate(spec, 256)) {
        REQUIRE(op.interval.start >= 0);
        REQUIRE(op.interval.start < op.interval.end);
        REQUIRE(op.interval.end <= 256);
        const auto key = std::make_tuple(op.interval.start, op.interval.end,
                                         op.bandwidth);
        if (op.kind == Op::Kind::insert) ledger.insert(key);
        if (op.kind == Op::Kind::remove) {
            const auto it = ledger.find(key);
            REQUIRE(it != ledger.end());
            ledger.erase(it);
        }
    }
}

TEST_CASE("single-slot universes generate valid intervals") {
    WorkloadSpec spec;
    spec.op_count = 200;
    for (const Op& op : generate(spec, 1)) {
        CHECK(op.interval == Interval{0, 1});
    }
}

TEST_CASE("spec validation") {
    WorkloadSpec spec;
    spec.insert_fraction = 0.7;  // no longer sums to 1
    CHECK_THROWS_AS(generate(spec, 64), std::invalid_argument);
    spec = WorkloadSpec{};
    spec.min_bandwidth = 0;
    CHECK_THROWS_AS(generate(spec, 64), std::invalid_argument);
    spec = WorkloadSpec{};
    spec.short_fraction = 0.9;
    CHECK_THROWS_AS(generate(spec, 64), std::invalid_argument);
    spec = WorkloadSpec{};
    spec.op_count = -1;
    CHECK_THROWS_AS(generate(spec, 64), std::invalid_argument);
    CHECK_THROWS_AS(generate(WorkloadSpec{}, 0), std::invalid_argument);
}
