#ifndef ASTRES_ORACLE_HPP
#define ASTRES_ORACLE_HPP

#include <cstdint>
#include <set>
#include <span>
#include <tuple>
#include <vector>

#include "astres/types.hpp"

namespace astres {

// Brute-force ground truth: one load counter per slot plus a multiset of
// outstanding reservations. Every operation is O(interval length), which
// keeps it trustworthy and slow in equal measure.
class SlotOracle {
public:
    explicit SlotOracle(std::int64_t slot_count);

    void insert(const Reservation& r);
    // Replays an outstanding reservation; removing one that was never
    // inserted is a harness bug and throws std::logic_error.
    void remove(const Reservation& r);
    Bandwidth max_reserved(Interval q) const;

    // The admission predicate the tree's insert_checked must agree with.
    bool would_admit(const Reservation& r, Bandwidth capacity) const;

    std::int64_t slot_count() const {
        return static_cast<std::int64_t>(loads_.size());
    }
    std::span<const Bandwidth> loads() const { return loads_; }
    std::size_t outstanding() const { return ledger_.size(); }

    // Recomputes all loads from the ledger and compares with the
    // incrementally maintained array.
    bool consistent() const;

private:
    void check_interval(Interval iv) const;

    std::vector<Bandwidth> loads_;
    std::multiset<std::tuple<SlotIndex, SlotIndex, Bandwidth>> ledger_;
};

}  // namespace astres

#endif  // ASTRES_ORACLE_HPP
