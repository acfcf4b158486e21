#ifndef ASTRES_TREE_CONFIG_HPP
#define ASTRES_TREE_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "astres/types.hpp"

namespace astres {

// Static shape of a tree: the universe starts at origin_s_m and spans
// leaf_count() * granularity_g time units, divided into slots of size
// granularity_g. divisors_x[i] is the branching factor of level i+1;
// an empty divisor set yields a single-leaf tree.
struct TreeConfig {
    std::int64_t granularity_g = 1;
    std::vector<std::int64_t> divisors_x;
    std::int64_t origin_s_m = 0;

    // Number of levels L; the root is level 1, leaves are level L.
    std::int64_t level_count() const {
        return static_cast<std::int64_t>(divisors_x.size()) + 1;
    }

    // n = product of all divisors (empty product = 1). Throws
    // std::overflow_error when the product does not fit.
    std::int64_t leaf_count() const;

    // Universe size |M| in time units. Checked.
    std::int64_t universe_span() const;

    // Throws std::invalid_argument on a divisor < 2 or granularity < 1,
    // std::overflow_error when derived quantities overflow.
    void validate() const;

    friend bool operator==(const TreeConfig&, const TreeConfig&) = default;
};

// Maps a timestamp (same units as granularity_g, e.g. seconds) to its slot.
// Throws std::out_of_range outside [origin, origin + n*g).
SlotIndex slot_of(const TreeConfig& config, std::int64_t timestamp);

// Named shipped configurations:
//   "paper-month-5min"  12-level mixed 2/3 split, 5-minute slots, 9216
//                       leaves covering a 32-day month
//   "binary-1024"       ten binary levels, unit granularity
std::optional<TreeConfig> preset(std::string_view name);

// All-binary tree with 2^levels leaves and unit granularity.
TreeConfig binary_config(int levels);

}  // namespace astres

#endif  // ASTRES_TREE_CONFIG_HPP
