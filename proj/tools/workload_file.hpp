#ifndef ASTRES_CLI_WORKLOAD_FILE_HPP
#define ASTRES_CLI_WORKLOAD_FILE_HPP

#include <istream>
#include <vector>

#include "astres/types.hpp"

namespace astres_cli {

// One operation per line, whitespace-separated, slots as integers:
//
//   insert <start> <end> <bw>
//   delete <start> <end> <bw>
//   query <start> <end>
//   advance <now>
//
// '#' starts a comment; blank lines are skipped. Intervals are half-open.
struct WorkloadLine {
    enum class Kind { insert, remove, query, advance };
    Kind kind = Kind::query;
    int line_no = 0;
    astres::Interval interval{};
    astres::Bandwidth bandwidth = 0;  // insert/delete only
    std::int64_t now = 0;             // advance only
};

std::vector<WorkloadLine> parse_workload(std::istream& in);
std::vector<WorkloadLine> parse_workload_file(const std::string& path);

}  // namespace astres_cli

#endif  // ASTRES_CLI_WORKLOAD_FILE_HPP
