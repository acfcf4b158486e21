#include "astres/finger.hpp"

#include <algorithm>

namespace astres {

struct FingerQuery {
    static FingerResult run(const Tree& tree, Finger& finger, Interval q) {
        if (!finger.usable_for(tree)) {
            finger.path_.clear();
            FingerResult out;
            out.value = tree.max_reserved_traced(q, finger.path_);
            finger.last_interval_ = q;
            finger.version_ = tree.version();
            finger.valid_ = true;
            return out;
        }

        const Interval merged{std::min(finger.last_interval_.start, q.start),
                              std::max(finger.last_interval_.end, q.end)};
        const LevelTable& layout = tree.layout();

        // Containment of merged is monotone along the path: true from the
        // root down to some entry, false below it. Binary search for the
        // deepest true entry; the root (index 0) spans everything.
        std::size_t lo = 0;
        std::size_t hi = finger.path_.size() - 1;
        int probes = 0;
        while (lo < hi) {
            const std::size_t mid = lo + (hi - lo + 1) / 2;
            ++probes;
            const Tree::PathEntry& e = finger.path_[mid];
            if (layout.node_interval(e.level, e.node).contains(merged))
                lo = mid;
            else
                hi = mid - 1;
        }

        const Tree::PathEntry restart = finger.path_[lo];
        finger.path_.resize(lo);  // resumed walk re-pushes the restart node
        FingerResult out;
        out.value = tree.max_reserved_resumed(restart.level, restart.node,
                                              restart.prefix_nv, q, finger.path_);
        out.resumed = true;
        out.probes = probes;
        out.restart_level = restart.level;
        out.restart_node = restart.node;
        finger.last_interval_ = q;
        finger.version_ = tree.version();
        return out;
    }
};

FingerResult query_with_finger(const Tree& tree, Finger& finger, Interval q) {
    return FingerQuery::run(tree, finger, q);
}

}  // namespace astres
