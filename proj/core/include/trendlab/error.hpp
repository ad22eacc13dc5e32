#pragma once

#include <stdexcept>
#include <string>

namespace trendlab {

/// Input or argument validation failure. The CLI maps these to exit code 2;
/// anything else escaping a command maps to exit code 1.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// Malformed input data. Carries the 1-based line number when known.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& message, std::size_t line = 0)
        : Error(line ? message + " (line " + std::to_string(line) + ")" : message),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace trendlab
