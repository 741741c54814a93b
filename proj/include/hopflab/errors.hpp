#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hopflab {

/// Undeclared symbol, missing structure-map data, inconsistent presentation.
class DefinitionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller violated an operation's precondition (mixed presentations, degree 0, ...).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parameter outside its documented domain.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A pairing could not be reduced to base cases within the recursion bound.
class EvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int column, std::vector<std::string> expected = {})
        : std::runtime_error(format(message, line, column, expected)),
          line_(line),
          column_(column),
          expected_(std::move(expected)) {}

    int line() const { return line_; }
    int column() const { return column_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    static std::string format(const std::string& message, int line, int column,
                              const std::vector<std::string>& expected) {
        std::string out = std::to_string(line) + ":" + std::to_string(column) + ": " + message;
        if (!expected.empty()) {
            out += " (expected one of:";
            for (const auto& e : expected) out += " '" + e + "'";
            out += ")";
        }
        return out;
    }

    int line_;
    int column_;
    std::vector<std::string> expected_;
};

}  // namespace hopflab
