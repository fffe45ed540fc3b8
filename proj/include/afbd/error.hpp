#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace afbd {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based, or 0 when the problem is not
/// tied to a single line (e.g. a missing section separator).
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& msg)
        : Error(line == 0 ? msg : "line " + std::to_string(line) + ": " + msg)
        , line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An argument or set refers to something outside the framework.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The brute-force oracle refuses frameworks above its size guard.
class GuardExceeded : public Error {
public:
    using Error::Error;
};

/// A budgeted exhaustive search ran out of work before reaching an answer.
class Inconclusive : public Error {
public:
    using Error::Error;
};

/// Backdoor detection found nothing within the caller's size budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Requested combination of options is not supported by this routine.
class Unsupported : public Error {
public:
    using Error::Error;
};

} // namespace afbd
