#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace analogy {

// Base class of every error the library reports.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed term, pattern or algebra-spec text. Position is a 1-based
// line/column into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(message + " at " + std::to_string(line) + ":" + std::to_string(column)),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Violated precondition of a query (unknown element, language mismatch,
// not a homomorphism, not a rewrite rule, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Term enumeration exceeded the configured class cap. Distinct from a
// normal (possibly unsaturated) termination.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

} // namespace analogy
