#include <CLI11.hpp>
#include <iostream>

#include "cli_errors.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"advance reservation trees: replay, differential test, bench"};
    app.require_subcommand(1);

    astres_cli::ReplayOptions replay;
    CLI::App* replay_cmd =
        app.add_subcommand("replay", "apply a workload file to a tree");
    replay_cmd->add_option("config", replay.config_path, "config file")
        ->required();
    replay_cmd->add_option("workload", replay.workload_path, "workload file")
        ->required();
    replay_cmd->add_flag("--check-capacity", replay.check_capacity,
                         "admit reservations against the config capacity");
    replay_cmd->add_flag("--finger", replay.use_finger,
                         "serve queries through a finger");
    replay_cmd->add_flag("--window", replay.use_window,
                         "absolute-time ops over a wrapping window");

    astres_cli::DifftestOptions difftest;
    CLI::App* difftest_cmd = app.add_subcommand(
        "difftest", "run a seeded workload against the slot oracle");
    difftest_cmd->add_option("config", difftest.config_path, "config file")
        ->required();
    difftest_cmd->add_option("--seed", difftest.seed, "workload seed");
    difftest_cmd->add_option("--ops", difftest.ops, "operation count");
    difftest_cmd->add_option("--mix", difftest.mix,
                             "insert,delete,query fractions");

    astres_cli::BenchOptions bench;
    CLI::App* bench_cmd = app.add_subcommand(
        "bench", "replay a seeded workload and report touch/time stats");
    bench_cmd->add_option("config", bench.config_path, "config file")
        ->required();
    bench_cmd->add_option("--ops", bench.ops, "operation count");
    bench_cmd->add_option("--seed", bench.seed, "workload seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? astres_cli::exit_ok : astres_cli::exit_usage;
    }

    if (replay_cmd->parsed())
        return astres_cli::cmd_replay(replay, std::cout, std::cerr);
    if (difftest_cmd->parsed())
        return astres_cli::cmd_difftest(difftest, std::cout, std::cerr);
    return astres_cli::cmd_bench(bench, std::cout, std::cerr);
}
