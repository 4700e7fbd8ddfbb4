#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cnctp {

// Base class for every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input file. `line` is 1-based, 0 when no line applies.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t line)
        : error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// An instance or dataset does not match the schema a model or context expects.
class schema_error : public error {
public:
    using error::error;
};

} // namespace cnctp
