#ifndef ASTRES_TESTS_HELPERS_HPP
#define ASTRES_TESTS_HELPERS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "astres/tree.hpp"

namespace astres::testing {

// Total reserved at one slot, computed the slow way: nv summed along the
// root-to-leaf path.
inline Bandwidth path_sum(const Tree& tree, SlotIndex slot) {
    const LevelTable& layout = tree.layout();
    Bandwidth sum = 0;
    std::int64_t level = 1;
    std::int64_t node = 1;
    while (true) {
        sum += tree.record(node).nv;
        if (level == layout.level_count()) break;
        const Interval iv = layout.node_interval(level, node);
        const std::int64_t child_size = layout.slots_per_node(level + 1);
        node = layout.child_index(level, node, (slot - iv.start) / child_size);
        ++level;
    }
    return sum;
}

inline std::vector<NodeRecord> snapshot(const Tree& tree) {
    return {tree.records().begin(), tree.records().end()};
}

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo,
                            std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Interval random_interval(std::mt19937_64& rng, std::int64_t n) {
    const std::int64_t len = uniform(rng, 1, n);
    const std::int64_t start = uniform(rng, 0, n - len);
    return Interval{start, start + len};
}

// Mixed-divisor config with values 2..5 and at most six levels.
inline TreeConfig random_config(std::mt19937_64& rng) {
    TreeConfig cfg;
    const std::int64_t levels = uniform(rng, 0, 5);
    for (std::int64_t i = 0; i < levels; ++i)
        cfg.divisors_x.push_back(uniform(rng, 2, 5));
    return cfg;
}

}  // namespace astres::testing

#endif  // ASTRES_TESTS_HELPERS_HPP
