#pragma once

#include <stdexcept>
#include <string>

namespace leibniz {

/// A caller violated an operation's documented precondition, or an
/// internal consistency check (e.g. a closedness assertion) tripped.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed input document. Line and column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(what), line_(line), column_(column)
    {
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace leibniz
