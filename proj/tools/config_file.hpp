#ifndef ASTRES_CLI_CONFIG_FILE_HPP
#define ASTRES_CLI_CONFIG_FILE_HPP

#include <istream>
#include <optional>
#include <string>

#include "astres/tree_config.hpp"

namespace astres_cli {

// Resolved contents of a tree config file. The file is a flat key/value
// document:
//
//   # a binary tree of 4 slots
//   granularity_g = 1
//   divisors = 2 2
//   origin = 0
//   capacity = 10
//
// Keys: granularity_g, divisors, origin, capacity, preset. Exactly one of
// divisors/preset must be present; a preset supplies its own granularity
// which granularity_g may override. '=' is optional, '#' starts a comment.
struct CliConfig {
    astres::TreeConfig tree;
    std::optional<astres::Bandwidth> capacity;
};

CliConfig parse_config(std::istream& in);
CliConfig parse_config_file(const std::string& path);

}  // namespace astres_cli

#endif  // ASTRES_CLI_CONFIG_FILE_HPP
