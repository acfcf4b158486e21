#ifndef ASTRES_WORKLOAD_HPP
#define ASTRES_WORKLOAD_HPP

#include <cstdint>
#include <vector>

#include "astres/types.hpp"

namespace astres {

// Seeded recipe for a random operation sequence. All randomness flows from
// the seed through a fixed generator, so a spec names one sequence
// bit-for-bit.
struct WorkloadSpec {
    std::uint64_t seed = 1;
    std::int64_t op_count = 100000;

    // Operation mix; must sum to 1.
    double insert_fraction = 0.45;
    double delete_fraction = 0.15;
    double query_fraction = 0.40;

    // Interval length mix: short spans (1-4 slots), medium (about sqrt n)
    // and near-full spans, exercising all three recursion cases.
    double short_fraction = 0.4;
    double medium_fraction = 0.4;
    double long_fraction = 0.2;

    Bandwidth min_bandwidth = 1;
    Bandwidth max_bandwidth = 100;

    void validate() const;
};

struct Op {
    enum class Kind { insert, remove, query };
    Kind kind = Kind::query;
    Interval interval;
    Bandwidth bandwidth = 0;  // unused for queries

    friend bool operator==(const Op&, const Op&) = default;
};

// Deterministic sequence over a universe of slot_count slots. Every remove
// replays a reservation inserted earlier in the sequence and not yet
// removed; when none is outstanding the generator substitutes an insert.
std::vector<Op> generate(const WorkloadSpec& spec, std::int64_t slot_count);

}  // namespace astres

#endif  // ASTRES_WORKLOAD_HPP
