#pragma once

#include <stdexcept>
#include <string>

namespace bafa {

/// Violated user-facing precondition (bad operands, unmet size requirements).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Internal contract violation: a construction produced an object that breaks
/// one of its own guaranteed bounds. Always a bug, never a user error.
struct BoundCheckError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Syntax error in a Boolean expression, with the byte offset of the problem.
struct ExprParseError : std::runtime_error {
    std::size_t pos;
    ExprParseError(std::size_t offset, const std::string& msg)
        : std::runtime_error("offset " + std::to_string(offset) + ": " + msg), pos(offset) {}
};

/// Syntax or semantic error in an automaton file, with the 1-based line number.
struct ParseError : std::runtime_error {
    std::size_t line;
    ParseError(std::size_t line_no, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

} // namespace bafa
