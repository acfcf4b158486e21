#include "astres/difftest.hpp"

#include <algorithm>

#include "astres/oracle.hpp"

namespace astres {

namespace {

struct IndexedOp {
    std::int64_t id = 0;  // position in the original sequence, for the hook
    Op op;
};

// Replays a candidate sequence and reports whether it still diverges:
// any query disagreeing with the oracle, or a failed final audit.
bool diverges(const TreeConfig& config, const std::vector<IndexedOp>& ops,
              const FaultHook& fault) {
    Tree tree(config);
    SlotOracle oracle(tree.slot_count());
    bool seen = false;
    for (const IndexedOp& item : ops) {
        switch (item.op.kind) {
            case Op::Kind::insert:
                tree.insert(Reservation{item.op.interval, item.op.bandwidth});
                oracle.insert(Reservation{item.op.interval, item.op.bandwidth});
                break;
            case Op::Kind::remove:
                tree.remove(Reservation{item.op.interval, item.op.bandwidth});
                oracle.remove(Reservation{item.op.interval, item.op.bandwidth});
                break;
            case Op::Kind::query:
                if (tree.max_reserved(item.op.interval) !=
                    oracle.max_reserved(item.op.interval))
                    seen = true;
                break;
        }
        if (fault) fault(item.id, tree);
    }
    return seen || tree.audit().has_value();
}

// Drops the op at position pos; a dropped insert takes its first matching
// later delete along so the ledger stays consistent.
std::vector<IndexedOp> without(const std::vector<IndexedOp>& ops,
                               std::size_t pos) {
    std::vector<IndexedOp> out;
    out.reserve(ops.size());
    std::optional<Op> matching_remove;
    if (ops[pos].op.kind == Op::Kind::insert)
        matching_remove = Op{Op::Kind::remove, ops[pos].op.interval,
                             ops[pos].op.bandwidth};
    bool removed_pair = false;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (i == pos) continue;
        if (i > pos && !removed_pair && matching_remove &&
            ops[i].op == *matching_remove) {
            removed_pair = true;
            continue;
        }
        out.push_back(ops[i]);
    }
    return out;
}

std::vector<Op> shrink(const TreeConfig& config, std::vector<IndexedOp> ops,
                       const FaultHook& fault) {
    // Budget on replayed ops keeps the greedy passes bounded even for long
    // failing prefixes.
    std::int64_t budget = 2'000'000;
    bool changed = true;
    while (changed && budget > 0) {
        changed = false;
        for (std::size_t i = 0; i < ops.size() && budget > 0;) {
            std::vector<IndexedOp> candidate = without(ops, i);
            budget -= static_cast<std::int64_t>(candidate.size());
            if (!candidate.empty() && diverges(config, candidate, fault)) {
                ops = std::move(candidate);
                changed = true;
            } else {
                ++i;
            }
        }
    }
    std::vector<Op> out;
    out.reserve(ops.size());
    for (const IndexedOp& item : ops) out.push_back(item.op);
    return out;
}

}  // namespace

std::int64_t DiffReport::max_touched() const {
    return std::max({max_touched_insert, max_touched_delete, max_touched_query});
}

DiffReport differential_run(const TreeConfig& config, const WorkloadSpec& spec,
                            const FaultHook& fault) {
    const std::vector<Op> ops = generate(spec, LevelTable(config).leaf_count());

    Tree tree(config);
    SlotOracle oracle(tree.slot_count());
    DiffReport report;

    std::int64_t mutations = 0;
    const auto note_divergence = [&](std::int64_t index) {
        if (!report.first_divergence) report.first_divergence = index;
    };

    for (std::size_t i = 0; i < ops.size(); ++i) {
        const Op& op = ops[i];
        bool mutated = false;
        switch (op.kind) {
            case Op::Kind::insert:
                tree.insert(Reservation{op.interval, op.bandwidth});
                oracle.insert(Reservation{op.interval, op.bandwidth});
                ++report.insert_count;
                report.touched_sum_insert += tree.touched_nodes();
                report.max_touched_insert =
                    std::max(report.max_touched_insert, tree.touched_nodes());
                mutated = true;
                break;
            case Op::Kind::remove:
                tree.remove(Reservation{op.interval, op.bandwidth});
                oracle.remove(Reservation{op.interval, op.bandwidth});
                ++report.delete_count;
                report.touched_sum_delete += tree.touched_nodes();
                report.max_touched_delete =
                    std::max(report.max_touched_delete, tree.touched_nodes());
                mutated = true;
                break;
            case Op::Kind::query: {
                const Bandwidth got = tree.max_reserved(op.interval);
                const Bandwidth want = oracle.max_reserved(op.interval);
                ++report.query_count;
                report.touched_sum_query += tree.touched_nodes();
                report.max_touched_query =
                    std::max(report.max_touched_query, tree.touched_nodes());
                if (got != want) {
                    ++report.mismatches;
                    note_divergence(static_cast<std::int64_t>(i));
                }
                break;
            }
        }
        if (fault) fault(static_cast<std::int64_t>(i), tree);
        if (mutated) {
            ++mutations;
            if (mutations % 64 == 0 || i + 1 == ops.size()) {
                if (tree.audit()) {
                    ++report.audit_failures;
                    note_divergence(static_cast<std::int64_t>(i));
                }
            }
        }
        ++report.ops_applied;
    }

    if (report.first_divergence) {
        std::vector<IndexedOp> prefix;
        prefix.reserve(static_cast<std::size_t>(*report.first_divergence) + 1);
        for (std::int64_t i = 0; i <= *report.first_divergence; ++i)
            prefix.push_back(
                IndexedOp{i, ops[static_cast<std::size_t>(i)]});
        if (diverges(config, prefix, fault))
            report.reproduction = shrink(config, std::move(prefix), fault);
    }
    return report;
}

}  // namespace astres
