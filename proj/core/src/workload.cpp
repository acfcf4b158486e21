#include "astres/workload.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace astres {

namespace {

// Distribution helpers built directly on the raw engine output. The
// standard <random> distributions are implementation-defined, which would
// tie "same seed, same sequence" to one standard library.
std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo,
                         std::int64_t hi) {
    // inclusive range; modulo bias is irrelevant at these range sizes
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(rng() % span);
}

double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

void WorkloadSpec::validate() const {
    const double op_sum = insert_fraction + delete_fraction + query_fraction;
    if (std::abs(op_sum - 1.0) > 1e-9)
        throw std::invalid_argument("operation fractions must sum to 1");
    if (insert_fraction < 0 || delete_fraction < 0 || query_fraction < 0)
        throw std::invalid_argument("operation fractions must be non-negative");
    const double len_sum = short_fraction + medium_fraction + long_fraction;
    if (std::abs(len_sum - 1.0) > 1e-9)
        throw std::invalid_argument("length fractions must sum to 1");
    if (short_fraction < 0 || medium_fraction < 0 || long_fraction < 0)
        throw std::invalid_argument("length fractions must be non-negative");
    if (min_bandwidth < 1 || max_bandwidth < min_bandwidth)
        throw std::invalid_argument("bandwidth range must satisfy 1 <= min <= max");
    if (op_count < 0) throw std::invalid_argument("op count must be >= 0");
}

std::vector<Op> generate(const WorkloadSpec& spec, std::int64_t slot_count) {
    spec.validate();
    if (slot_count < 1)
        throw std::invalid_argument("universe needs at least one slot");

    std::mt19937_64 rng(spec.seed);
    const std::int64_t sqrt_n = std::max<std::int64_t>(
        1, static_cast<std::int64_t>(std::sqrt(static_cast<double>(slot_count))));

    const auto pick_interval = [&]() -> Interval {
        const double roll = uniform_unit(rng);
        std::int64_t len;
        if (roll < spec.short_fraction) {
            len = uniform_int(rng, 1, std::min<std::int64_t>(4, slot_count));
        } else if (roll < spec.short_fraction + spec.medium_fraction) {
            const std::int64_t lo = std::max<std::int64_t>(1, sqrt_n / 2);
            const std::int64_t hi =
                std::min(slot_count, sqrt_n + sqrt_n / 2 + 1);
            len = uniform_int(rng, lo, std::max(lo, hi));
        } else {
            const std::int64_t lo =
                std::max<std::int64_t>(1, (slot_count * 4) / 5);
            len = uniform_int(rng, lo, slot_count);
        }
        const SlotIndex start = uniform_int(rng, 0, slot_count - len);
        return Interval{start, start + len};
    };

    std::vector<Op> ops;
    ops.reserve(static_cast<std::size_t>(spec.op_count));
    std::vector<Reservation> outstanding;

    for (std::int64_t i = 0; i < spec.op_count; ++i) {
        const double roll = uniform_unit(rng);
        if (roll < spec.query_fraction) {
            ops.push_back(Op{Op::Kind::query, pick_interval(), 0});
            continue;
        }
        const bool want_delete =
            roll < spec.query_fraction + spec.delete_fraction;
        if (want_delete && !outstanding.empty()) {
            const std::size_t pick = static_cast<std::size_t>(uniform_int(
                rng, 0, static_cast<std::int64_t>(outstanding.size()) - 1));
            const Reservation r = outstanding[pick];
            outstanding[pick] = outstanding.back();
            outstanding.pop_back();
            ops.push_back(Op{Op::Kind::remove, r.interval, r.bandwidth});
            continue;
        }
        // insert, or a delete with nothing outstanding
        const Reservation r{pick_interval(),
                            uniform_int(rng, spec.min_bandwidth,
                                        spec.max_bandwidth)};
        outstanding.push_back(r);
        ops.push_back(Op{Op::Kind::insert, r.interval, r.bandwidth});
    }
    return ops;
}

}  // namespace astres
