#include "astres/window.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace astres {

WrappingWindow::WrappingWindow(TreeConfig config)
    : tree_(std::move(config)), horizon_(tree_.slot_count() / 2) {
    if (tree_.layout().level_count() < 2 || tree_.layout().branching(1) != 2)
        throw std::invalid_argument(
            "wrapping window requires a first divisor of 2");
}

void WrappingWindow::advance(std::int64_t now_slot) {
    if (now_slot < now_)
        throw std::invalid_argument("time regression: now " +
                                    std::to_string(now_slot) + " < " +
                                    std::to_string(now_));
    now_ = now_slot;
    while (now_ - base_ >= horizon_) {
        const int half = static_cast<int>((base_ / horizon_) % 2);
        tree_.reset_root_subtree(half);
        base_ += horizon_;
        ++wraps_;
        last_recycled_ = half;
    }
}

void WrappingWindow::check_window(Interval absolute) const {
    if (absolute.start >= absolute.end)
        throw std::invalid_argument("empty interval " + to_string(absolute));
    if (absolute.start < now_)
        throw std::out_of_range("interval " + to_string(absolute) +
                                " starts in the past (now " +
                                std::to_string(now_) + ")");
    if (absolute.end > now_ + horizon_)
        throw std::out_of_range("interval " + to_string(absolute) +
                                " ends beyond the horizon " +
                                std::to_string(now_ + horizon_));
}

WrappingWindow::PhysicalPieces WrappingWindow::to_physical(
    Interval absolute) const {
    const std::int64_t span = 2 * horizon_;
    const SlotIndex head_start = absolute.start % span;
    const std::int64_t len = absolute.length();
    if (head_start + len <= span)
        return PhysicalPieces{Interval{head_start, head_start + len}, {}};
    return PhysicalPieces{Interval{head_start, span},
                          Interval{0, head_start + len - span}};
}

AdmitResult WrappingWindow::reserve(Interval absolute, Bandwidth bandwidth,
                                    Bandwidth capacity) {
    check_window(absolute);
    if (bandwidth <= 0)
        throw std::invalid_argument("reserve requires positive bandwidth");
    if (capacity < 0)
        throw std::invalid_argument("capacity must be non-negative");
    const PhysicalPieces pieces = to_physical(absolute);
    if (!pieces.tail)
        return tree_.insert_checked(Reservation{pieces.head, bandwidth},
                                    capacity);
    // The mapping wrapped mod 2H, so the reservation occupies two physical
    // ranges. Check both against the pre-call state, then insert both or
    // neither.
    const Bandwidth peak = std::max(tree_.max_reserved(pieces.head),
                                    tree_.max_reserved(*pieces.tail));
    if (peak > capacity - bandwidth) return AdmitResult::rejected;
    tree_.insert(Reservation{pieces.head, bandwidth});
    tree_.insert(Reservation{*pieces.tail, bandwidth});
    return AdmitResult::admitted;
}

Bandwidth WrappingWindow::max_reserved(Interval absolute) const {
    check_window(absolute);
    const PhysicalPieces pieces = to_physical(absolute);
    Bandwidth best = tree_.max_reserved(pieces.head);
    if (pieces.tail)
        best = std::max(best, tree_.max_reserved(*pieces.tail));
    return best;
}

}  // namespace astres
