#ifndef ASTRES_LAYOUT_HPP
#define ASTRES_LAYOUT_HPP

#include <cstdint>
#include <vector>

#include "astres/tree_config.hpp"
#include "astres/types.hpp"

namespace astres {

// Index arithmetic for the flat, level-ordered node array. Levels and node
// indices are 1-based: level 1 is the root, nodes 1..delta(L) run level by
// level (heap order). All entries are precomputed once per config; after
// that, navigation is pure multiplication and addition.
class LevelTable {
public:
    // Throws on invalid config or overflow of the node count.
    explicit LevelTable(const TreeConfig& config);

    std::int64_t level_count() const { return levels_; }
    // Number of nodes on levels 1..l.
    std::int64_t delta(std::int64_t l) const { return delta_[check_level(l)]; }
    // Flat index of the first node on level l.
    std::int64_t sigma(std::int64_t l) const { return sigma_[check_level(l)]; }
    // Nodes on level l.
    std::int64_t nodes_on_level(std::int64_t l) const {
        return count_[check_level(l)];
    }
    // Interval size |M_l| of a level-l node, in slots.
    std::int64_t slots_per_node(std::int64_t l) const {
        return slots_[check_level(l)];
    }
    // Branching factor of level-l nodes; valid for l < L.
    std::int64_t branching(std::int64_t l) const;

    std::int64_t total_nodes() const { return delta_.back(); }
    std::int64_t leaf_count() const { return count_.back(); }

    // Flat index of child c (0 <= c < branching(l)) of node on level l.
    std::int64_t child_index(std::int64_t level, std::int64_t node,
                             std::int64_t child_ordinal) const;

    // Slot interval implicitly covered by a node.
    Interval node_interval(std::int64_t level, std::int64_t node) const;

    // Level of a flat index (inverse of the level-order layout).
    std::int64_t level_of(std::int64_t node) const;

private:
    std::int64_t check_level(std::int64_t l) const;
    void check_node(std::int64_t level, std::int64_t node) const;

    std::int64_t levels_;
    std::vector<std::int64_t> divisors_;  // divisors_[l] = X_l, 1-based
    std::vector<std::int64_t> delta_;     // 1-based
    std::vector<std::int64_t> sigma_;     // 1-based
    std::vector<std::int64_t> count_;     // nodes per level, 1-based
    std::vector<std::int64_t> slots_;     // slots per node, 1-based
};

}  // namespace astres

#endif  // ASTRES_LAYOUT_HPP
