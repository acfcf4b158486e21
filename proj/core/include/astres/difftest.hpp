#ifndef ASTRES_DIFFTEST_HPP
#define ASTRES_DIFFTEST_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "astres/tree.hpp"
#include "astres/tree_config.hpp"
#include "astres/workload.hpp"

namespace astres {

struct DiffReport {
    std::int64_t ops_applied = 0;
    std::int64_t mismatches = 0;
    std::int64_t audit_failures = 0;

    std::int64_t insert_count = 0;
    std::int64_t delete_count = 0;
    std::int64_t query_count = 0;
    std::int64_t touched_sum_insert = 0;
    std::int64_t touched_sum_delete = 0;
    std::int64_t touched_sum_query = 0;
    std::int64_t max_touched_insert = 0;
    std::int64_t max_touched_delete = 0;
    std::int64_t max_touched_query = 0;

    // Index of the first diverging op in the generated sequence.
    std::optional<std::int64_t> first_divergence;
    // Shrunken op sequence that still diverges; empty when clean.
    std::vector<Op> reproduction;

    bool clean() const { return mismatches == 0 && audit_failures == 0; }
    std::int64_t max_touched() const;
};

// Invoked after each applied op; may corrupt the tree. Fault injection
// hook for testing the harness itself.
using FaultHook = std::function<void(std::int64_t op_index, Tree&)>;

// Applies the generated sequence to the tree and the slot oracle in
// lockstep, comparing every query exactly and auditing a sample of the
// mutations (every 64th, plus the last op). On divergence the failing
// prefix is shrunk greedily: ops are dropped one at a time (an insert
// takes its matching delete with it) while the divergence persists, within
// a fixed replay budget so pathological cases still terminate.
DiffReport differential_run(const TreeConfig& config, const WorkloadSpec& spec,
                            const FaultHook& fault = {});

}  // namespace astres

#endif  // ASTRES_DIFFTEST_HPP
