#ifndef ASTRES_FINGER_HPP
#define ASTRES_FINGER_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "astres/tree.hpp"
#include "astres/types.hpp"

namespace astres {

// Per-session query state: the containment chain of the previous query,
// each node tagged with the nv sum of its strict ancestors. Lets the next
// query of a nearby interval restart inside the tree instead of at the
// root. Owned by one caller; never stored in the Tree.
class Finger {
public:
    Finger() = default;

    bool empty() const { return path_.empty(); }
    // Usable against this tree: explicitly valid, populated, and the tree
    // has not mutated since the path was recorded.
    bool usable_for(const Tree& tree) const {
        return valid_ && !path_.empty() && version_ == tree.version();
    }

    // Drops the recorded path. The next query runs from the root and
    // rebuilds it. Idempotent.
    void invalidate() {
        path_.clear();
        valid_ = false;
    }

    Interval last_interval() const { return last_interval_; }
    std::span<const Tree::PathEntry> path() const { return path_; }

private:
    friend struct FingerQuery;

    Interval last_interval_{};
    std::vector<Tree::PathEntry> path_;
    std::uint64_t version_ = 0;
    bool valid_ = false;
};

struct FingerResult {
    Bandwidth value = 0;
    // False when the query fell back to a root walk (empty, invalidated or
    // stale finger). A stale finger is never consulted, so the answer is
    // right either way.
    bool resumed = false;
    // Containment tests spent binary-searching the stacked levels.
    int probes = 0;
    std::int64_t restart_level = 1;
    std::int64_t restart_node = 1;
};

// Exactly max_reserved(tree, q), computed from the finger's restart node
// when the finger is usable. Updates the finger for q in either case.
FingerResult query_with_finger(const Tree& tree, Finger& finger, Interval q);

}  // namespace astres

#endif  // ASTRES_FINGER_HPP
