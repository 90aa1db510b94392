#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gaq {

// Bad arguments to a library call (index out of range, size mismatch, ...).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An elementary function evaluated outside its open domain.
class DomainError : public std::domain_error {
public:
    DomainError(std::string op, const std::string& detail)
        : std::domain_error(op + ": " + detail), op_(std::move(op)) {}
    const std::string& operation() const noexcept { return op_; }

private:
    std::string op_;
};

// Lexical or grammatical error in a text input, with 1-based position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// A structurally well-formed input that fails a semantic check.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Iterative numerics that did not converge.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& msg, double residual)
        : std::runtime_error(msg + " (residual " + std::to_string(residual) + ")"),
          residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

}  // namespace gaq
