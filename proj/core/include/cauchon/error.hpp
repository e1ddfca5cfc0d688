#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cauchon {

/// Raised by the text readers. Carries the 1-based line of the input that
/// could not be parsed.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Raised when an exhaustive computation would visit more objects than the
/// configured cap allows.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cauchon
