#ifndef ASTRES_CLI_ERRORS_HPP
#define ASTRES_CLI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace astres_cli {

// Exit codes shared by every subcommand.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_parse = 2;
inline constexpr int exit_range = 3;     // range errors and capacity refusals
inline constexpr int exit_mismatch = 4;  // differential divergence

class FileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Syntax or semantic problem in an input file; line 0 means the file as a
// whole (e.g. a missing required key).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " +
                                            message
                                      : message),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace astres_cli

#endif  // ASTRES_CLI_ERRORS_HPP
