#include "astres/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace astres {

SlotOracle::SlotOracle(std::int64_t slot_count) {
    if (slot_count < 1)
        throw std::invalid_argument("oracle needs at least one slot");
    loads_.assign(static_cast<std::size_t>(slot_count), 0);
}

void SlotOracle::check_interval(Interval iv) const {
    if (iv.start == iv.end)
        throw std::invalid_argument("empty interval " + to_string(iv));
    if (iv.start < 0 || iv.end < iv.start || iv.end > slot_count())
        throw std::out_of_range("interval " + to_string(iv) +
                                " outside universe");
}

void SlotOracle::insert(const Reservation& r) {
    check_interval(r.interval);
    if (r.bandwidth <= 0)
        throw std::invalid_argument("insert requires positive bandwidth");
    for (SlotIndex t = r.interval.start; t < r.interval.end; ++t)
        loads_[static_cast<std::size_t>(t)] =
            checked_add(loads_[static_cast<std::size_t>(t)], r.bandwidth);
    ledger_.emplace(r.interval.start, r.interval.end, r.bandwidth);
}

void SlotOracle::remove(const Reservation& r) {
    check_interval(r.interval);
    const auto key =
        std::make_tuple(r.interval.start, r.interval.end, r.bandwidth);
    const auto it = ledger_.find(key);
    if (it == ledger_.end())
        throw std::logic_error("remove of a reservation not in the ledger");
    ledger_.erase(it);
    for (SlotIndex t = r.interval.start; t < r.interval.end; ++t)
        loads_[static_cast<std::size_t>(t)] -= r.bandwidth;
}

Bandwidth SlotOracle::max_reserved(Interval q) const {
    check_interval(q);
    Bandwidth best = loads_[static_cast<std::size_t>(q.start)];
    for (SlotIndex t = q.start + 1; t < q.end; ++t)
        best = std::max(best, loads_[static_cast<std::size_t>(t)]);
    return best;
}

bool SlotOracle::would_admit(const Reservation& r, Bandwidth capacity) const {
    return max_reserved(r.interval) <= capacity - r.bandwidth;
}

bool SlotOracle::consistent() const {
    std::vector<Bandwidth> recomputed(loads_.size(), 0);
    for (const auto& [start, end, bw] : ledger_)
        for (SlotIndex t = start; t < end; ++t)
            recomputed[static_cast<std::size_t>(t)] += bw;
    return recomputed == loads_;
}

}  // namespace astres
