#ifndef ASTRES_WINDOW_HPP
#define ASTRES_WINDOW_HPP

#include <cstdint>
#include <optional>

#include "astres/tree.hpp"
#include "astres/types.hpp"

namespace astres {

// Maps an unbounded absolute timeline onto a physical tree spanning twice
// the reservation horizon. Absolute slot a lives at physical slot
// a mod 2H; each H-slot block alternates between the two physical halves,
// and advancing time past a block zeroes the half it occupied, making room
// for the block two steps ahead. Reservations are constrained to
// [now, now + H), so live data never collides with a recycled block.
//
// The tree's first divisor must be 2: each half is then exactly one root
// subtree and a wrap is a subtree reset plus a single root mv repair.
class WrappingWindow {
public:
    // config describes the physical tree; its leaf count 2H must be even,
    // with divisors_x[0] == 2. Time starts at absolute slot 0.
    explicit WrappingWindow(TreeConfig config);

    // Moves the clock forward (monotone; regression throws). Wraps as many
    // halves as now has passed.
    void advance(std::int64_t now_slot);

    // Admission over absolute slots; the interval must lie in
    // [now, now + H). Throws std::out_of_range for past or beyond-horizon
    // intervals; capacity shortfalls are a rejected result, not an error.
    AdmitResult reserve(Interval absolute, Bandwidth bandwidth,
                        Bandwidth capacity);

    // Range max over absolute slots in [now, now + H).
    Bandwidth max_reserved(Interval absolute) const;

    std::int64_t now() const { return now_; }
    std::int64_t horizon_slots() const { return horizon_; }
    // Absolute slot where the earlier of the two live blocks begins.
    std::int64_t base_time() const { return base_; }
    std::int64_t wrap_count() const { return wraps_; }
    // Physical half (0 or 1) zeroed by the most recent wrap, if any.
    std::optional<int> last_recycled_half() const { return last_recycled_; }

    const Tree& tree() const { return tree_; }

private:
    struct PhysicalPieces {
        Interval head;
        std::optional<Interval> tail;  // set when the mapping wraps mod 2H
    };
    PhysicalPieces to_physical(Interval absolute) const;
    void check_window(Interval absolute) const;

    Tree tree_;
    std::int64_t horizon_;
    std::int64_t base_ = 0;
    std::int64_t now_ = 0;
    std::int64_t wraps_ = 0;
    std::optional<int> last_recycled_;
};

}  // namespace astres

#endif  // ASTRES_WINDOW_HPP
