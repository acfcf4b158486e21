#include "astres/layout.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace astres {

LevelTable::LevelTable(const TreeConfig& config) {
    config.validate();
    levels_ = config.level_count();

    divisors_.assign(static_cast<std::size_t>(levels_) + 1, 0);
    for (std::int64_t l = 1; l < levels_; ++l)
        divisors_[static_cast<std::size_t>(l)] =
            config.divisors_x[static_cast<std::size_t>(l - 1)];

    count_.assign(static_cast<std::size_t>(levels_) + 1, 0);
    delta_.assign(static_cast<std::size_t>(levels_) + 1, 0);
    sigma_.assign(static_cast<std::size_t>(levels_) + 1, 0);
    slots_.assign(static_cast<std::size_t>(levels_) + 1, 0);

    count_[1] = 1;
    delta_[1] = 1;
    sigma_[1] = 1;
    for (std::int64_t l = 2; l <= levels_; ++l) {
        const auto ul = static_cast<std::size_t>(l);
        count_[ul] = checked_mul(count_[ul - 1], divisors_[ul - 1]);
        delta_[ul] = checked_add(delta_[ul - 1], count_[ul]);
        sigma_[ul] = delta_[ul - 1] + 1;
    }

    // Built leaf-up so every entry is an exact product, no division.
    slots_[static_cast<std::size_t>(levels_)] = 1;
    for (std::int64_t l = levels_ - 1; l >= 1; --l) {
        const auto ul = static_cast<std::size_t>(l);
        slots_[ul] = checked_mul(slots_[ul + 1], divisors_[ul]);
    }
}

std::int64_t LevelTable::check_level(std::int64_t l) const {
    if (l < 1 || l > levels_)
        throw std::out_of_range("level " + std::to_string(l) + " outside 1.." +
                                std::to_string(levels_));
    return static_cast<std::size_t>(l);
}

void LevelTable::check_node(std::int64_t level, std::int64_t node) const {
    const std::int64_t lo = sigma(level);
    const std::int64_t hi = lo + nodes_on_level(level);
    if (node < lo || node >= hi)
        throw std::out_of_range("node " + std::to_string(node) +
                                " not on level " + std::to_string(level));
}

std::int64_t LevelTable::branching(std::int64_t l) const {
    check_level(l);
    if (l >= levels_)
        throw std::out_of_range("leaf level has no branching factor");
    return divisors_[static_cast<std::size_t>(l)];
}

std::int64_t LevelTable::child_index(std::int64_t level, std::int64_t node,
                                     std::int64_t child_ordinal) const {
    const std::int64_t x = branching(level);
    check_node(level, node);
    if (child_ordinal < 0 || child_ordinal >= x)
        throw std::out_of_range("child ordinal " +
                                std::to_string(child_ordinal) + " outside 0.." +
                                std::to_string(x - 1));
    return sigma(level + 1) + (node - sigma(level)) * x + child_ordinal;
}

Interval LevelTable::node_interval(std::int64_t level, std::int64_t node) const {
    check_node(level, node);
    const std::int64_t rank = node - sigma(level);
    const std::int64_t size = slots_per_node(level);
    return Interval{rank * size, (rank + 1) * size};
}

std::int64_t LevelTable::level_of(std::int64_t node) const {
    if (node < 1 || node > total_nodes())
        throw std::out_of_range("node index " + std::to_string(node) +
                                " outside 1.." + std::to_string(total_nodes()));
    const auto it = std::lower_bound(delta_.begin() + 1, delta_.end(), node);
    return it - delta_.begin();
}

}  // namespace astres
