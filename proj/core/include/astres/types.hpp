#ifndef ASTRES_TYPES_HPP
#define ASTRES_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace astres {

// Reserved resource amounts. Signed: deletions are internally negated
// insertions, and a tree whose delete contract was violated may hold
// negative path sums.
using Bandwidth = std::int64_t;

// Slot index within a tree's universe, 0-based. Node indices in the flat
// array are 1-based and also fit in this type.
using SlotIndex = std::int64_t;

// Half-open slot range [start, end). Valid against a tree of n leaves when
// 0 <= start < end <= n.
struct Interval {
    SlotIndex start = 0;
    SlotIndex end = 0;

    constexpr SlotIndex length() const { return end - start; }
    constexpr bool contains(const Interval& other) const {
        return start <= other.start && other.end <= end;
    }
    friend constexpr bool operator==(const Interval&, const Interval&) = default;
};

struct Reservation {
    Interval interval;
    Bandwidth bandwidth = 0;

    friend constexpr bool operator==(const Reservation&, const Reservation&) = default;
};

// Per-node state. nv is the amount reserved over exactly this node's
// interval; mv is the maximum reserved strictly below the node, not
// counting its own nv. Leaves keep mv == 0.
struct NodeRecord {
    Bandwidth nv = 0;
    Bandwidth mv = 0;

    friend constexpr bool operator==(const NodeRecord&, const NodeRecord&) = default;
};

enum class AdmitResult { admitted, rejected };

// Overflow-checked signed arithmetic. Admission control must never admit
// through wraparound, so all bandwidth math funnels through these.
inline Bandwidth checked_add(Bandwidth a, Bandwidth b) {
    Bandwidth out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("bandwidth addition overflow");
    return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("integer multiplication overflow");
    return out;
}

inline std::string to_string(const Interval& iv) {
    return "[" + std::to_string(iv.start) + "," + std::to_string(iv.end) + ")";
}

}  // namespace astres

#endif  // ASTRES_TYPES_HPP
