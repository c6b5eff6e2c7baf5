#pragma once

#include <stdexcept>
#include <string>

namespace bolab {

// Precondition violations (bad sizes, invalid parameters, malformed input).
// The CLI maps these to exit code 1.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A simulation left the regime where the discretization means anything
// (non-finite samples or sup norm past the hard ceiling). Exit code 2.
class BlowupError : public std::runtime_error {
public:
    BlowupError(const std::string& what, double t)
        : std::runtime_error(what), time(t) {}
    double time;
};

// Config-file errors carry the 1-based line number of the offending entry
// (0 when no single line is to blame, e.g. a missing required key).
class ConfigError : public ValidationError {
public:
    ConfigError(const std::string& what, int line_arg = 0)
        : ValidationError(line_arg > 0 ? "line " + std::to_string(line_arg) + ": " + what
                                       : what),
          line(line_arg) {}
    int line;
};

} // namespace bolab
