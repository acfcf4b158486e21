#ifndef ASTRES_CLI_COMMANDS_HPP
#define ASTRES_CLI_COMMANDS_HPP

#include <cstdint>
#include <ostream>
#include <string>

namespace astres_cli {

struct ReplayOptions {
    std::string config_path;
    std::string workload_path;
    bool check_capacity = false;
    bool use_finger = false;
    bool use_window = false;
};

struct DifftestOptions {
    std::string config_path;
    std::uint64_t seed = 1;
    std::int64_t ops = 100000;
    std::string mix = "0.45,0.15,0.40";  // insert,delete,query fractions
};

struct BenchOptions {
    std::string config_path;
    std::uint64_t seed = 1;
    std::int64_t ops = 100000;
};

int cmd_replay(const ReplayOptions& opts, std::ostream& out, std::ostream& err);
int cmd_difftest(const DifftestOptions& opts, std::ostream& out,
                 std::ostream& err);
int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace astres_cli

#endif  // ASTRES_CLI_COMMANDS_HPP
