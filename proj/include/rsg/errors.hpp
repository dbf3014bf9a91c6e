#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rsg {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed caller input: foreign symbols, mismatched alphabets, bad state ids.
class InputError : public Error {
public:
    using Error::Error;
};

// Text-format problems, annotated with a 1-based line number (0 = unknown).
class ParseError : public Error {
public:
    ParseError(int line, const std::string& message)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_ = 0;
};

// An explicit-state computation outgrew its configured budget.
class BudgetError : public Error {
public:
    BudgetError(std::size_t limit, const std::string& what_hit)
        : Error(what_hit + " exceeded budget of " + std::to_string(limit)),
          limit_(limit) {}

    std::size_t limit() const { return limit_; }

private:
    std::size_t limit_ = 0;
};

// A precondition between modules was violated (caller bug, not user input).
class ContractError : public Error {
public:
    using Error::Error;
};

// A certificate that was assumed valid turned out not to be.
class CertificateError : public Error {
public:
    using Error::Error;
};

} // namespace rsg
