#include "workload_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "cli_errors.hpp"

namespace astres_cli {

namespace {

std::int64_t parse_int(const std::string& token, int line) {
    std::int64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line, "expected an integer, got '" + token + "'");
    return value;
}

}  // namespace

std::vector<WorkloadLine> parse_workload(std::istream& in) {
    std::vector<WorkloadLine> out;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream ss(raw);
        std::vector<std::string> tokens;
        std::string tok;
        while (ss >> tok) tokens.push_back(tok);
        if (tokens.empty()) continue;

        WorkloadLine line;
        line.line_no = line_no;
        const std::string& op = tokens.front();
        const auto expect_args = [&](std::size_t n) {
            if (tokens.size() != n + 1)
                throw ParseError(line_no, "'" + op + "' takes " +
                                              std::to_string(n) + " arguments");
        };
        if (op == "insert" || op == "delete") {
            expect_args(3);
            line.kind = op == "insert" ? WorkloadLine::Kind::insert
                                       : WorkloadLine::Kind::remove;
            line.interval = {parse_int(tokens[1], line_no),
                             parse_int(tokens[2], line_no)};
            line.bandwidth = parse_int(tokens[3], line_no);
        } else if (op == "query") {
            expect_args(2);
            line.kind = WorkloadLine::Kind::query;
            line.interval = {parse_int(tokens[1], line_no),
                             parse_int(tokens[2], line_no)};
        } else if (op == "advance") {
            expect_args(1);
            line.kind = WorkloadLine::Kind::advance;
            line.now = parse_int(tokens[1], line_no);
        } else {
            throw ParseError(line_no, "unknown operation '" + op + "'");
        }
        out.push_back(line);
    }
    return out;
}

std::vector<WorkloadLine> parse_workload_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileError("cannot open workload file '" + path + "'");
    return parse_workload(in);
}

}  // namespace astres_cli
