#include "astres/tree.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>
#include <string>

namespace astres {

namespace {

// Audit arithmetic must never throw, so the max below a node is formed in
// 128 bits and compared to the stored 64-bit value.
using Wide = __int128;

Bandwidth clamp_to_bandwidth(Wide v) {
    constexpr Wide lo = std::numeric_limits<Bandwidth>::min();
    constexpr Wide hi = std::numeric_limits<Bandwidth>::max();
    return static_cast<Bandwidth>(std::clamp(v, lo, hi));
}

}  // namespace

Tree::Tree(TreeConfig config)
    : config_(std::move(config)),
      layout_(config_),
      nodes_(static_cast<std::size_t>(layout_.total_nodes()) + 1) {}

Tree::Tree(const Tree& other)
    : config_(other.config_),
      layout_(other.layout_),
      nodes_(other.nodes_),
      touched_(other.touched_.load(std::memory_order_relaxed)),
      version_(other.version_.load(std::memory_order_relaxed)) {}

Tree& Tree::operator=(const Tree& other) {
    if (this != &other) {
        config_ = other.config_;
        layout_ = other.layout_;
        nodes_ = other.nodes_;
        touched_.store(other.touched_.load(std::memory_order_relaxed),
                       std::memory_order_relaxed);
        version_.store(other.version_.load(std::memory_order_relaxed),
                       std::memory_order_relaxed);
    }
    return *this;
}

Tree::Tree(Tree&& other) noexcept
    : config_(std::move(other.config_)),
      layout_(std::move(other.layout_)),
      nodes_(std::move(other.nodes_)),
      touched_(other.touched_.load(std::memory_order_relaxed)),
      version_(other.version_.load(std::memory_order_relaxed)) {}

Tree& Tree::operator=(Tree&& other) noexcept {
    if (this != &other) {
        config_ = std::move(other.config_);
        layout_ = std::move(other.layout_);
        nodes_ = std::move(other.nodes_);
        touched_.store(other.touched_.load(std::memory_order_relaxed),
                       std::memory_order_relaxed);
        version_.store(other.version_.load(std::memory_order_relaxed),
                       std::memory_order_relaxed);
    }
    return *this;
}

void Tree::check_interval(Interval iv) const {
    if (iv.start == iv.end)
        throw std::invalid_argument("empty interval " + to_string(iv));
    if (iv.start < 0 || iv.end < iv.start || iv.end > slot_count())
        throw std::out_of_range("interval " + to_string(iv) +
                                " outside universe [0," +
                                std::to_string(slot_count()) + ")");
}

void Tree::recompute_mv(std::int64_t level, std::int64_t node) {
    const std::int64_t x = layout_.branching(level);
    const std::int64_t first_child = layout_.child_index(level, node, 0);
    Bandwidth best = std::numeric_limits<Bandwidth>::min();
    for (std::int64_t c = 0; c < x; ++c) {
        const NodeRecord& child = nodes_[static_cast<std::size_t>(first_child + c)];
        best = std::max(best, checked_add(child.nv, child.mv));
    }
    nodes_[static_cast<std::size_t>(node)].mv = best;
}

// Visits the child parts of iv at the given node in the order the checked
// insertion and its cleanup both rely on: larger edge part first, then the
// wholly covered middle children left to right, then the remaining edge.
// fn returns false to stop; the walk reports whether it ran to completion.
template <typename PartFn>
bool Tree::walk_parts(std::int64_t level, std::int64_t node, SlotIndex lo,
                      Interval iv, PartFn&& fn) const {
    const std::int64_t child_size = layout_.slots_per_node(level + 1);
    const std::int64_t first = (iv.start - lo) / child_size;
    const std::int64_t last = (iv.end - 1 - lo) / child_size;
    const auto child_of = [&](std::int64_t c) {
        return layout_.child_index(level, node, c);
    };
    if (first == last)
        return fn(level + 1, child_of(first), lo + first * child_size, iv);

    const SlotIndex first_lo = lo + first * child_size;
    const SlotIndex last_lo = lo + last * child_size;
    const Interval left_part{iv.start, first_lo + child_size};
    const Interval right_part{last_lo, iv.end};
    const bool left_is_larger = left_part.length() >= right_part.length();

    if (left_is_larger) {
        if (!fn(level + 1, child_of(first), first_lo, left_part)) return false;
    } else {
        if (!fn(level + 1, child_of(last), last_lo, right_part)) return false;
    }
    for (std::int64_t c = first + 1; c < last; ++c) {
        const SlotIndex child_lo = lo + c * child_size;
        if (!fn(level + 1, child_of(c), child_lo,
                Interval{child_lo, child_lo + child_size}))
            return false;
    }
    if (left_is_larger)
        return fn(level + 1, child_of(last), last_lo, right_part);
    return fn(level + 1, child_of(first), first_lo, left_part);
}

void Tree::insert_rec(std::int64_t level, std::int64_t node, SlotIndex lo,
                      Interval iv, Bandwidth amount, std::int64_t& touches) {
    NodeRecord& rec = nodes_[static_cast<std::size_t>(node)];
    if (iv.start == lo && iv.end == lo + layout_.slots_per_node(level)) {
        rec.nv = checked_add(rec.nv, amount);
        return;
    }
    ++touches;
    walk_parts(level, node, lo, iv,
               [&](std::int64_t l, std::int64_t n, SlotIndex child_lo,
                   Interval part) {
                   insert_rec(l, n, child_lo, part, amount, touches);
                   return true;
               });
    recompute_mv(level, node);
}

void Tree::insert(const Reservation& r) {
    check_interval(r.interval);
    if (r.bandwidth <= 0)
        throw std::invalid_argument("insert requires positive bandwidth");
    version_.fetch_add(1, std::memory_order_relaxed);
    std::int64_t touches = 0;
    insert_rec(1, 1, 0, r.interval, r.bandwidth, touches);
    touched_.store(touches, std::memory_order_relaxed);
}

void Tree::remove(const Reservation& r) {
    check_interval(r.interval);
    if (r.bandwidth <= 0)
        throw std::invalid_argument("remove requires positive bandwidth");
    version_.fetch_add(1, std::memory_order_relaxed);
    std::int64_t touches = 0;
    insert_rec(1, 1, 0, r.interval, -r.bandwidth, touches);
    touched_.store(touches, std::memory_order_relaxed);
}

Bandwidth Tree::query_rec(std::int64_t level, std::int64_t node, SlotIndex lo,
                          Interval iv, Bandwidth prefix, std::int64_t& touches,
                          std::vector<PathEntry>* path) const {
    if (path) path->push_back(PathEntry{level, node, prefix});
    const NodeRecord rec = nodes_[static_cast<std::size_t>(node)];
    if (iv.start == lo && iv.end == lo + layout_.slots_per_node(level))
        return checked_add(rec.nv, rec.mv);
    ++touches;
    const Bandwidth below_prefix = checked_add(prefix, rec.nv);
    const std::int64_t child_size = layout_.slots_per_node(level + 1);
    const std::int64_t first = (iv.start - lo) / child_size;
    const std::int64_t last = (iv.end - 1 - lo) / child_size;
    if (first == last) {
        const SlotIndex child_lo = lo + first * child_size;
        return checked_add(
            rec.nv, query_rec(level + 1, layout_.child_index(level, node, first),
                              child_lo, iv, below_prefix, touches, path));
    }
    // iv divides here, so the containment chain ends at this node. Only the
    // two edge parts recurse; middle children are closed over directly.
    const SlotIndex first_lo = lo + first * child_size;
    Bandwidth best =
        query_rec(level + 1, layout_.child_index(level, node, first), first_lo,
                  Interval{iv.start, first_lo + child_size}, below_prefix,
                  touches, nullptr);
    for (std::int64_t c = first + 1; c < last; ++c) {
        const NodeRecord mid =
            nodes_[static_cast<std::size_t>(layout_.child_index(level, node, c))];
        best = std::max(best, checked_add(mid.nv, mid.mv));
    }
    const SlotIndex last_lo = lo + last * child_size;
    best = std::max(
        best, query_rec(level + 1, layout_.child_index(level, node, last),
                        last_lo, Interval{last_lo, iv.end}, below_prefix,
                        touches, nullptr));
    return checked_add(rec.nv, best);
}

Bandwidth Tree::max_reserved(Interval q) const {
    check_interval(q);
    std::int64_t touches = 0;
    const Bandwidth result = query_rec(1, 1, 0, q, 0, touches, nullptr);
    touched_.store(touches, std::memory_order_relaxed);
    return result;
}

Bandwidth Tree::max_reserved_traced(Interval q,
                                    std::vector<PathEntry>& path) const {
    check_interval(q);
    std::int64_t touches = 0;
    const Bandwidth result = query_rec(1, 1, 0, q, 0, touches, &path);
    touched_.store(touches, std::memory_order_relaxed);
    return result;
}

Bandwidth Tree::max_reserved_resumed(std::int64_t level, std::int64_t node,
                                     Bandwidth prefix_nv, Interval q,
                                     std::vector<PathEntry>& path) const {
    check_interval(q);
    const Interval span = layout_.node_interval(level, node);
    if (!span.contains(q))
        throw std::invalid_argument("restart node does not span the query");
    std::int64_t touches = 0;
    const Bandwidth below =
        query_rec(level, node, span.start, q, prefix_nv, touches, &path);
    touched_.store(touches, std::memory_order_relaxed);
    return checked_add(prefix_nv, below);
}

bool Tree::checked_rec(std::int64_t level, std::int64_t node, SlotIndex lo,
                       Interval iv, Bandwidth amount, Bandwidth capacity,
                       Bandwidth prefix, std::int64_t& touches,
                       std::int64_t& mark) {
    NodeRecord& rec = nodes_[static_cast<std::size_t>(node)];
    if (iv.start == lo && iv.end == lo + layout_.slots_per_node(level)) {
        // Check before writing: a marked node carries no partial effect, so
        // the cleanup pass stops there without undoing anything.
        const Bandwidth next_nv = checked_add(rec.nv, amount);
        const Bandwidth peak =
            checked_add(checked_add(prefix, next_nv), rec.mv);
        if (peak > capacity) {
            mark = node;
            return false;
        }
        rec.nv = next_nv;
        return true;
    }
    ++touches;
    const Bandwidth below_prefix = checked_add(prefix, rec.nv);
    const bool ok = walk_parts(
        level, node, lo, iv,
        [&](std::int64_t l, std::int64_t n, SlotIndex child_lo, Interval part) {
            return checked_rec(l, n, child_lo, part, amount, capacity,
                               below_prefix, touches, mark);
        });
    if (!ok) return false;  // mv untouched; cleanup recomputes it
    recompute_mv(level, node);
    return true;
}

bool Tree::cleanup_rec(std::int64_t level, std::int64_t node, SlotIndex lo,
                       Interval iv, Bandwidth amount, std::int64_t mark,
                       std::int64_t& touches) {
    NodeRecord& rec = nodes_[static_cast<std::size_t>(node)];
    if (iv.start == lo && iv.end == lo + layout_.slots_per_node(level)) {
        if (node == mark) return true;
        rec.nv = checked_add(rec.nv, -amount);
        return false;
    }
    ++touches;
    // Same part order as checked_rec, so stopping at the mark undoes
    // exactly the prefix that was written.
    const bool completed = walk_parts(
        level, node, lo, iv,
        [&](std::int64_t l, std::int64_t n, SlotIndex child_lo, Interval part) {
            return !cleanup_rec(l, n, child_lo, part, amount, mark, touches);
        });
    recompute_mv(level, node);
    return !completed;
}

AdmitResult Tree::insert_checked(const Reservation& r, Bandwidth capacity) {
    check_interval(r.interval);
    if (r.bandwidth <= 0)
        throw std::invalid_argument("insert requires positive bandwidth");
    if (capacity < 0)
        throw std::invalid_argument("capacity must be non-negative");
    version_.fetch_add(1, std::memory_order_relaxed);
    std::int64_t touches = 0;
    std::int64_t mark = 0;
    const bool admitted =
        checked_rec(1, 1, 0, r.interval, r.bandwidth, capacity, 0, touches, mark);
    if (!admitted) {
        const bool reached_mark =
            cleanup_rec(1, 1, 0, r.interval, r.bandwidth, mark, touches);
        assert(reached_mark);
        (void)reached_mark;
    }
    touched_.store(touches, std::memory_order_relaxed);
    return admitted ? AdmitResult::admitted : AdmitResult::rejected;
}

std::optional<Tree::AuditViolation> Tree::audit() const {
    // Deepest level first: a broken record is reported at its own index,
    // not at the ancestors whose equations it also breaks.
    const std::int64_t levels = layout_.level_count();
    for (std::int64_t l = levels; l >= 1; --l) {
        const std::int64_t first = layout_.sigma(l);
        const std::int64_t count = layout_.nodes_on_level(l);
        if (l == levels) {
            for (std::int64_t j = first; j < first + count; ++j) {
                const Bandwidth mv = nodes_[static_cast<std::size_t>(j)].mv;
                if (mv != 0) return AuditViolation{j, 0, mv};
            }
            continue;
        }
        const std::int64_t x = layout_.branching(l);
        for (std::int64_t j = first; j < first + count; ++j) {
            const std::int64_t child0 = layout_.child_index(l, j, 0);
            Wide best = std::numeric_limits<Bandwidth>::min();
            for (std::int64_t c = 0; c < x; ++c) {
                const NodeRecord& child =
                    nodes_[static_cast<std::size_t>(child0 + c)];
                best = std::max(best, Wide{child.nv} + Wide{child.mv});
            }
            const Bandwidth mv = nodes_[static_cast<std::size_t>(j)].mv;
            if (Wide{mv} != best)
                return AuditViolation{j, clamp_to_bandwidth(best), mv};
        }
    }
    return std::nullopt;
}

void Tree::reset_root_subtree(std::int64_t child_ordinal) {
    const std::int64_t levels = layout_.level_count();
    if (levels < 2)
        throw std::out_of_range("single-leaf tree has no root subtrees");
    const std::int64_t x1 = layout_.branching(1);
    if (child_ordinal < 0 || child_ordinal >= x1)
        throw std::out_of_range("root child ordinal out of range");
    version_.fetch_add(1, std::memory_order_relaxed);
    std::int64_t zeroed = 0;
    for (std::int64_t l = 2; l <= levels; ++l) {
        const std::int64_t per_subtree = layout_.nodes_on_level(l) / x1;
        const std::int64_t begin = layout_.sigma(l) + child_ordinal * per_subtree;
        std::fill(nodes_.begin() + begin, nodes_.begin() + begin + per_subtree,
                  NodeRecord{});
        zeroed += per_subtree;
    }
    recompute_mv(1, 1);
    touched_.store(zeroed + 1, std::memory_order_relaxed);
}

NodeRecord Tree::record(std::int64_t node) const {
    if (node < 1 || node > layout_.total_nodes())
        throw std::out_of_range("node index out of range");
    return nodes_[static_cast<std::size_t>(node)];
}

void Tree::poke_record(std::int64_t node, NodeRecord rec) {
    if (node < 1 || node > layout_.total_nodes())
        throw std::out_of_range("node index out of range");
    version_.fetch_add(1, std::memory_order_relaxed);
    nodes_[static_cast<std::size_t>(node)] = rec;
}

}  // namespace astres
