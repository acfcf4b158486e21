#ifndef ASTRES_TREE_HPP
#define ASTRES_TREE_HPP

#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "astres/layout.hpp"
#include "astres/tree_config.hpp"
#include "astres/types.hpp"

namespace astres {

// Segment tree over a fixed slotted universe. Built once; nodes are never
// inserted, deleted or moved afterwards, so operation cost depends only on
// the number of levels, never on how many reservations are outstanding.
//
// Concurrency: callers serialize mutations (insert/remove/insert_checked/
// reset_root_subtree/poke_record). Any number of threads may run
// max_reserved concurrently while no mutation is in flight; the traversal
// statistic is the only state a query writes and it is a relaxed atomic.
class Tree {
public:
    explicit Tree(TreeConfig config);

    // Raises the reserved amount by r.bandwidth over every slot of
    // r.interval. Requires bandwidth > 0.
    void insert(const Reservation& r);

    // Inverse of insert: identical traversal with the bandwidth negated.
    // The structure keeps no ledger; callers only remove reservations they
    // previously inserted with equal parameters.
    void remove(const Reservation& r);

    // Maximum total reserved bandwidth over any slot of q. Mutates no
    // record.
    Bandwidth max_reserved(Interval q) const;

    // Admits r iff max_reserved(r.interval) + r.bandwidth <= capacity at
    // call time. The check runs inside the insertion; on violation the
    // traversal stops, marks the offending node and a cleanup pass deletes
    // what was written up to the mark, leaving the array bit-identical to
    // the pre-call state.
    AdmitResult insert_checked(const Reservation& r, Bandwidth capacity);

    struct AuditViolation {
        std::int64_t node = 0;       // first offending flat index
        Bandwidth expected_mv = 0;   // 0 for leaves
        Bandwidth actual_mv = 0;
    };
    // Checks mv == max over children of (nv + mv) at every internal node
    // and mv == 0 at every leaf. Never throws; problems come back as a
    // violation for the lowest flat index.
    std::optional<AuditViolation> audit() const;

    // Zeroes every record in the subtree rooted at the given root child
    // and repairs the root mv. This is the wrap primitive of the time
    // window; it discards whatever was reserved inside that subtree.
    void reset_root_subtree(std::int64_t child_ordinal);

    const TreeConfig& config() const { return config_; }
    const LevelTable& layout() const { return layout_; }
    std::int64_t slot_count() const { return layout_.leaf_count(); }

    // Flat node array, 1-based; index 0 is an unused all-zero slot.
    std::span<const NodeRecord> records() const { return nodes_; }
    NodeRecord record(std::int64_t node) const;

    // Overwrites one record without maintaining any invariant. Fault
    // injection hook for audit and differential tests.
    void poke_record(std::int64_t node, NodeRecord rec);

    // Nodes the most recent operation descended through, i.e. visits that
    // had to divide or pass down their interval; terminal exact-match
    // reads/writes are not traversal steps. Resets every operation.
    std::int64_t touched_nodes() const {
        return touched_.load(std::memory_order_relaxed);
    }

    // Bumped by every mutating call (including rejected admissions, which
    // transiently write). Fingers use it to detect staleness.
    std::uint64_t version() const {
        return version_.load(std::memory_order_relaxed);
    }

    // One node of the containment chain recorded during a traced query:
    // the node's interval contains the query, and prefix_nv is the sum of
    // nv over its strict ancestors.
    struct PathEntry {
        std::int64_t level = 0;
        std::int64_t node = 0;
        Bandwidth prefix_nv = 0;
        friend bool operator==(const PathEntry&, const PathEntry&) = default;
    };

    // max_reserved that also appends the containment chain from the root
    // down to the node where q was divided (or matched exactly).
    Bandwidth max_reserved_traced(Interval q, std::vector<PathEntry>& path) const;

    // Resumes the query recursion at a node already known to span q,
    // seeded with the nv sum of that node's strict ancestors. Appends the
    // chain from the restart node downward. Backbone of the finger.
    Bandwidth max_reserved_resumed(std::int64_t level, std::int64_t node,
                                   Bandwidth prefix_nv, Interval q,
                                   std::vector<PathEntry>& path) const;

    Tree(const Tree& other);
    Tree& operator=(const Tree& other);
    Tree(Tree&& other) noexcept;
    Tree& operator=(Tree&& other) noexcept;

private:
    void check_interval(Interval iv) const;
    void recompute_mv(std::int64_t level, std::int64_t node);

    // Visits iv's child parts in the shared traversal order (larger edge,
    // middles left to right, remaining edge); stops when fn returns false.
    template <typename PartFn>
    bool walk_parts(std::int64_t level, std::int64_t node, SlotIndex lo,
                    Interval iv, PartFn&& fn) const;

    void insert_rec(std::int64_t level, std::int64_t node, SlotIndex lo,
                    Interval iv, Bandwidth amount, std::int64_t& touches);
    Bandwidth query_rec(std::int64_t level, std::int64_t node, SlotIndex lo,
                        Interval iv, Bandwidth prefix, std::int64_t& touches,
                        std::vector<PathEntry>* path) const;
    bool checked_rec(std::int64_t level, std::int64_t node, SlotIndex lo,
                     Interval iv, Bandwidth amount, Bandwidth capacity,
                     Bandwidth prefix, std::int64_t& touches,
                     std::int64_t& mark);
    bool cleanup_rec(std::int64_t level, std::int64_t node, SlotIndex lo,
                     Interval iv, Bandwidth amount, std::int64_t mark,
                     std::int64_t& touches);

    TreeConfig config_;
    LevelTable layout_;
    std::vector<NodeRecord> nodes_;
    mutable std::atomic<std::int64_t> touched_{0};
    std::atomic<std::uint64_t> version_{0};
};

}  // namespace astres

#endif  // ASTRES_TREE_HPP
