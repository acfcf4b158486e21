#include "astres/tree_config.hpp"

#include <stdexcept>
#include <string>

namespace astres {

std::int64_t TreeConfig::leaf_count() const {
    std::int64_t n = 1;
    for (std::int64_t x : divisors_x) n = checked_mul(n, x);
    return n;
}

std::int64_t TreeConfig::universe_span() const {
    return checked_mul(leaf_count(), granularity_g);
}

void TreeConfig::validate() const {
    if (granularity_g < 1)
        throw std::invalid_argument("granularity must be a positive integer");
    for (std::int64_t x : divisors_x) {
        if (x < 2)
            throw std::invalid_argument("divisor " + std::to_string(x) +
                                        " is below the minimum of 2");
    }
    (void)universe_span();  // throws on overflow
}

SlotIndex slot_of(const TreeConfig& config, std::int64_t timestamp) {
    const std::int64_t span = config.universe_span();
    if (timestamp < config.origin_s_m || timestamp - config.origin_s_m >= span)
        throw std::out_of_range("timestamp " + std::to_string(timestamp) +
                                " outside universe");
    return (timestamp - config.origin_s_m) / config.granularity_g;
}

std::optional<TreeConfig> preset(std::string_view name) {
    if (name == "paper-month-5min") {
        TreeConfig cfg;
        cfg.granularity_g = 300;  // 5 minutes in seconds
        cfg.divisors_x = {2, 2, 2, 2, 2, 3, 2, 2, 2, 3, 2, 2};
        return cfg;
    }
    if (name == "binary-1024") return binary_config(10);
    return std::nullopt;
}

TreeConfig binary_config(int levels) {
    TreeConfig cfg;
    cfg.divisors_x.assign(static_cast<std::size_t>(levels), 2);
    return cfg;
}

}  // namespace astres
