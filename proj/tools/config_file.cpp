#include "config_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "astres/layout.hpp"
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

std::vector<std::string> split_tokens(std::string text) {
    for (char& c : text)
        if (c == ',' || c == '=') c = ' ';
    std::istringstream ss(text);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

}  // namespace

CliConfig parse_config(std::istream& in) {
    std::optional<std::int64_t> granularity;
    std::optional<std::vector<std::int64_t>> divisors;
    std::optional<std::int64_t> origin;
    std::optional<astres::Bandwidth> capacity;
    std::optional<std::string> preset_name;

    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        const std::vector<std::string> tokens = split_tokens(raw);
        if (tokens.empty()) continue;
        const std::string& key = tokens.front();
        const auto require_one_value = [&]() -> const std::string& {
            if (tokens.size() != 2)
                throw ParseError(line_no, "key '" + key +
                                              "' takes exactly one value");
            return tokens[1];
        };
        const auto reject_duplicate = [&](bool present) {
            if (present) throw ParseError(line_no, "duplicate key '" + key + "'");
        };
        if (key == "granularity_g") {
            reject_duplicate(granularity.has_value());
            granularity = parse_int(require_one_value(), line_no);
        } else if (key == "divisors") {
            reject_duplicate(divisors.has_value());
            if (tokens.size() < 2)
                throw ParseError(line_no, "divisors needs at least one value");
            std::vector<std::int64_t> xs;
            for (std::size_t i = 1; i < tokens.size(); ++i)
                xs.push_back(parse_int(tokens[i], line_no));
            divisors = std::move(xs);
        } else if (key == "origin") {
            reject_duplicate(origin.has_value());
            origin = parse_int(require_one_value(), line_no);
        } else if (key == "capacity") {
            reject_duplicate(capacity.has_value());
            capacity = parse_int(require_one_value(), line_no);
            if (*capacity < 0)
                throw ParseError(line_no, "capacity must be non-negative");
        } else if (key == "preset") {
            reject_duplicate(preset_name.has_value());
            preset_name = require_one_value();
        } else {
            throw ParseError(line_no, "unknown key '" + key + "'");
        }
    }

    if (divisors.has_value() == preset_name.has_value())
        throw ParseError(0, "exactly one of 'divisors' or 'preset' is required");

    CliConfig out;
    if (preset_name) {
        const auto resolved = astres::preset(*preset_name);
        if (!resolved)
            throw ParseError(0, "unknown preset '" + *preset_name + "'");
        out.tree = *resolved;
        if (granularity) out.tree.granularity_g = *granularity;
    } else {
        if (!granularity)
            throw ParseError(0, "granularity_g is required with divisors");
        out.tree.divisors_x = *divisors;
        out.tree.granularity_g = *granularity;
    }
    if (origin) out.tree.origin_s_m = *origin;
    out.capacity = capacity;

    try {
        out.tree.validate();
        (void)astres::LevelTable(out.tree);  // also proves the layout fits
    } catch (const std::exception& e) {
        throw ParseError(0, e.what());
    }
    return out;
}

CliConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileError("cannot open config file '" + path + "'");
    return parse_config(in);
}

}  // namespace astres_cli
