#pragma once

#include <stdexcept>
#include <string>

namespace fdrc {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input (diagrams, matrices, field descriptors, code files).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// An operation was called outside its stated domain.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// An exhaustive enumeration would exceed the caller's budget.
class BudgetError : public Error {
public:
    explicit BudgetError(const std::string& what) : Error(what) {}
};

}  // namespace fdrc
