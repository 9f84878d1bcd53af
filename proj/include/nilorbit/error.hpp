#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nilorbit {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A precondition on the arguments of an operation was violated
/// (non-skew matrix passed to the Pfaffian, odd order, and the like).
class InvalidInputError : public Error {
public:
    explicit InvalidInputError(const std::string& msg) : Error(msg) {}
};

/// Two operands live in spaces of different dimensions.
class DimensionMismatchError : public InvalidInputError {
public:
    explicit DimensionMismatchError(const std::string& msg) : InvalidInputError(msg) {}
};

/// Unknown catalog key or a parameter outside the documented range.
class CatalogError : public Error {
public:
    explicit CatalogError(const std::string& msg) : Error(msg) {}
};

/// Raised by the classifier for algebras outside its supported range.
class OutOfScopeError : public Error {
public:
    explicit OutOfScopeError(const std::string& msg) : Error(msg) {}
};

/// A witness covector was requested where none can exist (abelian input).
class NoWitnessError : public Error {
public:
    explicit NoWitnessError(const std::string& msg) : Error(msg) {}
};

/// Classifier found no matching class; indicates a bug upstream, since a
/// validated algebra of supported dimension always matches one class.
class InternalInconsistencyError : public Error {
public:
    explicit InternalInconsistencyError(const std::string& msg) : Error(msg) {}
};

/// Syntax or semantic error in a DSL document, with 1-based source position.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& msg)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace nilorbit
