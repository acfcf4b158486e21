#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "astres/difftest.hpp"
#include "astres/finger.hpp"
#include "astres/tree.hpp"
#include "astres/window.hpp"
#include "astres/workload.hpp"
#include "cli_errors.hpp"
#include "config_file.hpp"
#include "workload_file.hpp"

namespace astres_cli {

namespace {

constexpr std::int64_t oracle_slot_cap = 1 << 16;

// Common open/parse prologue; returns nonzero exit code on failure.
int load_config(const std::string& path, CliConfig& out, std::ostream& err) {
    try {
        out = parse_config_file(path);
        return exit_ok;
    } catch (const FileError& e) {
        err << e.what() << '\n';
        return exit_usage;
    } catch (const ParseError& e) {
        err << path << ": " << e.what() << '\n';
        return exit_parse;
    }
}

int run_window_replay(const CliConfig& config,
                      const std::vector<WorkloadLine>& lines, bool check_capacity,
                      std::ostream& out, std::ostream& err) {
    astres::WrappingWindow window(config.tree);
    const astres::Bandwidth capacity =
        check_capacity ? *config.capacity
                       : std::numeric_limits<astres::Bandwidth>::max();
    for (const WorkloadLine& line : lines) {
        try {
            switch (line.kind) {
                case WorkloadLine::Kind::advance:
                    window.advance(line.now);
                    break;
                case WorkloadLine::Kind::insert: {
                    const auto res =
                        window.reserve(line.interval, line.bandwidth, capacity);
                    if (check_capacity)
                        out << (res == astres::AdmitResult::admitted
                                    ? "admitted"
                                    : "rejected")
                            << '\n';
                    break;
                }
                case WorkloadLine::Kind::remove:
                    throw std::out_of_range(
                        "delete is not supported in window mode");
                case WorkloadLine::Kind::query:
                    out << window.max_reserved(line.interval) << '\n';
                    break;
            }
        } catch (const std::exception& e) {
            err << "line " << line.line_no << ": " << e.what() << '\n';
            return exit_range;
        }
    }
    return exit_ok;
}

int run_tree_replay(const CliConfig& config,
                    const std::vector<WorkloadLine>& lines, bool check_capacity,
                    bool use_finger, std::ostream& out, std::ostream& err) {
    astres::Tree tree(config.tree);
    astres::Finger finger;
    for (const WorkloadLine& line : lines) {
        try {
            switch (line.kind) {
                case WorkloadLine::Kind::advance:
                    throw std::out_of_range("advance requires --window");
                case WorkloadLine::Kind::insert:
                    if (check_capacity) {
                        const auto res = tree.insert_checked(
                            {line.interval, line.bandwidth}, *config.capacity);
                        out << (res == astres::AdmitResult::admitted
                                    ? "admitted"
                                    : "rejected")
                            << '\n';
                    } else {
                        tree.insert({line.interval, line.bandwidth});
                    }
                    break;
                case WorkloadLine::Kind::remove:
                    tree.remove({line.interval, line.bandwidth});
                    break;
                case WorkloadLine::Kind::query:
                    if (use_finger)
                        out << query_with_finger(tree, finger, line.interval)
                                   .value
                            << '\n';
                    else
                        out << tree.max_reserved(line.interval) << '\n';
                    break;
            }
        } catch (const std::exception& e) {
            err << "line " << line.line_no << ": " << e.what() << '\n';
            return exit_range;
        }
    }
    return exit_ok;
}

}  // namespace

int cmd_replay(const ReplayOptions& opts, std::ostream& out,
               std::ostream& err) {
    CliConfig config;
    if (const int code = load_config(opts.config_path, config, err)) return code;
    if (opts.check_capacity && !config.capacity) {
        err << "--check-capacity requires 'capacity' in the config file\n";
        return exit_usage;
    }
    if (opts.use_finger && opts.use_window) {
        err << "--finger does not combine with --window\n";
        return exit_usage;
    }

    std::vector<WorkloadLine> lines;
    try {
        lines = parse_workload_file(opts.workload_path);
    } catch (const FileError& e) {
        err << e.what() << '\n';
        return exit_usage;
    } catch (const ParseError& e) {
        err << opts.workload_path << ": " << e.what() << '\n';
        return exit_parse;
    }

    if (opts.use_window) {
        try {
            return run_window_replay(config, lines, opts.check_capacity, out,
                                     err);
        } catch (const std::invalid_argument& e) {
            err << e.what() << '\n';
            return exit_range;
        }
    }
    return run_tree_replay(config, lines, opts.check_capacity, opts.use_finger,
                           out, err);
}

int cmd_difftest(const DifftestOptions& opts, std::ostream& out,
                 std::ostream& err) {
    CliConfig config;
    if (const int code = load_config(opts.config_path, config, err)) return code;

    std::int64_t slots = 0;
    try {
        slots = config.tree.leaf_count();
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return exit_range;
    }
    if (slots > oracle_slot_cap) {
        err << "config spans " << slots
            << " slots; the brute-force oracle is capped at " << oracle_slot_cap
            << " (use bench for larger trees)\n";
        return exit_range;
    }

    astres::WorkloadSpec spec;
    spec.seed = opts.seed;
    spec.op_count = opts.ops;
    {
        std::istringstream mix(opts.mix);
        char c1 = 0;
        char c2 = 0;
        if (!(mix >> spec.insert_fraction >> c1 >> spec.delete_fraction >> c2 >>
              spec.query_fraction) ||
            c1 != ',' || c2 != ',' || !(mix >> std::ws).eof()) {
            err << "--mix expects three comma-separated fractions\n";
            return exit_usage;
        }
    }
    try {
        spec.validate();
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return exit_usage;
    }

    const astres::DiffReport report = differential_run(config.tree, spec);
    out << "ops,mismatches,max_touched,audit_failures\n"
        << report.ops_applied << ',' << report.mismatches << ','
        << report.max_touched() << ',' << report.audit_failures << '\n';
    if (report.clean()) return exit_ok;

    out << "# first divergence at op " << *report.first_divergence << '\n'
        << "# minimized reproduction:\n";
    for (const astres::Op& op : report.reproduction) {
        switch (op.kind) {
            case astres::Op::Kind::insert:
                out << "insert " << op.interval.start << ' ' << op.interval.end
                    << ' ' << op.bandwidth << '\n';
                break;
            case astres::Op::Kind::remove:
                out << "delete " << op.interval.start << ' ' << op.interval.end
                    << ' ' << op.bandwidth << '\n';
                break;
            case astres::Op::Kind::query:
                out << "query " << op.interval.start << ' ' << op.interval.end
                    << '\n';
                break;
        }
    }
    return exit_mismatch;
}

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
    CliConfig config;
    if (const int code = load_config(opts.config_path, config, err)) return code;

    astres::WorkloadSpec spec;
    spec.seed = opts.seed;
    spec.op_count = opts.ops;
    std::vector<astres::Op> ops;
    astres::Tree tree(config.tree);
    try {
        ops = astres::generate(spec, tree.slot_count());
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return exit_usage;
    }

    struct KindStats {
        std::int64_t count = 0;
        std::int64_t touched_sum = 0;
        std::int64_t touched_max = 0;
        std::int64_t ns_sum = 0;
    };
    KindStats stats[3];

    using clock = std::chrono::steady_clock;
    for (const astres::Op& op : ops) {
        const auto t0 = clock::now();
        switch (op.kind) {
            case astres::Op::Kind::insert:
                tree.insert({op.interval, op.bandwidth});
                break;
            case astres::Op::Kind::remove:
                tree.remove({op.interval, op.bandwidth});
                break;
            case astres::Op::Kind::query:
                (void)tree.max_reserved(op.interval);
                break;
        }
        const auto ns =
            std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() -
                                                                 t0)
                .count();
        KindStats& ks = stats[static_cast<int>(op.kind)];
        ++ks.count;
        ks.touched_sum += tree.touched_nodes();
        ks.touched_max = std::max(ks.touched_max, tree.touched_nodes());
        ks.ns_sum += ns;
    }

    out << "op,count,avg_touched,max_touched,ns_per_op\n";
    const char* names[3] = {"insert", "delete", "query"};
    const int order[3] = {static_cast<int>(astres::Op::Kind::insert),
                          static_cast<int>(astres::Op::Kind::remove),
                          static_cast<int>(astres::Op::Kind::query)};
    for (int i = 0; i < 3; ++i) {
        const KindStats& ks = stats[order[i]];
        const double avg =
            ks.count ? static_cast<double>(ks.touched_sum) /
                           static_cast<double>(ks.count)
                     : 0.0;
        const std::int64_t ns =
            ks.count ? ks.ns_sum / ks.count : 0;
        out << names[i] << ',' << ks.count << ',' << std::fixed
            << std::setprecision(2) << avg << ',' << ks.touched_max << ',' << ns
            << '\n';
    }
    return exit_ok;
}

}  // namespace astres_cli
